#pragma once

#include <array>
#include <string>
#include <vector>

#include "khoss/cube.hpp"

namespace khoss {

// An arc endpoint on a circle. `left` says on which side of the circle's
// stored traversal direction the arc leaves.
struct Site {
  int arc = 0;
  bool head = false;
  bool left = false;
  bool operator==(const Site&) const = default;
};

// A circle of a configuration: cyclic sequence of arc endpoints in traversal
// order. A circle with no sites is passive.
struct CircleWord {
  int id = 0;
  std::vector<Site> sites;
};

// Disjoint circles on the sphere joined by disjoint oriented arcs; the
// embedding is carried by the per-circle cyclic orders and side bits
// (a rotation system, which determines the sphere embedding for connected
// configurations).
struct Configuration {
  std::vector<CircleWord> circles;
  int arcs = 0;

  struct End {
    int circle = -1;
    int pos = -1;
  };
  End find_end(int arc, bool head) const;
  int circles_meeting_arc_count(int circle_index) const;  // distinct arcs
  bool circle_meets_arc(int circle_index, int arc) const;
  int site_count() const;
};

Configuration reverse(const Configuration& c);
Configuration mirror(const Configuration& c);

// Deletes passive circles; returns their ids through `passive_ids`.
Configuration active_part(const Configuration& c, std::vector<int>* passive_ids = nullptr);

// Connectivity of the circle/arc incidence graph (ignores passive circles).
bool connected(const Configuration& c);

// Surgery along every arc; dual arcs are the originals rotated 90 degrees
// counterclockwise. Passive circles persist with their ids; surgered circles
// get fresh ids in trace order.
Configuration dualize(const Configuration& c);

// Embedded isomorphism on the sphere: matches circles to circles and arcs to
// arcs, preserving arc orientations and the rotation system. With
// `up_to_reversal` also accepts a match after reversing every arc.
bool isomorphic(const Configuration& a, const Configuration& b, bool up_to_reversal);

// Text form used by golden tests: circles as cyclic endpoint words.
std::string debug_string(const Configuration& c);

// Sphere validity of a connected configuration (Euler formula on the traced
// faces). Used by tests on hand-built data.
bool sphere_embedding_ok(const Configuration& c);

// The sixteen reference classes of active connected 2-dimensional
// configurations, indexed by their conventional type numbers.
struct TwoDimTable {
  std::array<Configuration, 17> ref;  // [1..16]

  struct Choices {
    // which orientation class of each underlying shape carries the
    // contributing type number
    bool tripod_aligned_is_2 = true;    // both arcs oriented off the shared circle
    bool nested_aligned_is_3 = true;
    bool offside_first_is_6 = true;     // chord on the far side of the joined circle
    bool inside_first_is_7 = true;      // chord crossing the joining annulus
    bool interleaved_first_is_8 = true; // linked chords on one circle
  };
  static TwoDimTable build(const Choices& ch);
  static const TwoDimTable& standard();
};

struct ConfigClass {
  enum Kind { Zero, Split, Join, TwoDim, A, B, C, D, E } kind = Zero;
  int type = 0;  // TwoDim only, 1..16
  int p = 0, q = 0;
  int k = 0;
  bool contributes() const;
  std::string to_string() const;
};

// Classifies an active configuration (no passive circles). Disconnected
// configurations classify as Zero.
ConfigClass classify(const Configuration& active, const TwoDimTable& table);
int classify_two_dim(const Configuration& active_connected, const TwoDimTable& table);

// All family memberships of a k>=3 configuration, for the
// mutual-exclusivity check.
std::vector<ConfigClass> classify_all_matches(const Configuration& active,
                                              const TwoDimTable& table);

Configuration subconfiguration(const Configuration& c, int arc_i, int arc_j);

}  // namespace khoss
