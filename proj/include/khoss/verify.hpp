#pragma once

#include <random>
#include <string>
#include <vector>

#include "khoss/differential.hpp"
#include "khoss/homology.hpp"

namespace khoss {

struct RuleCheckStats {
  long faces = 0;
  long duality = 0;      // violation counts
  long conjugation = 0;
  long grading = 0;
  long filtration = 0;
  long extension = 0;
  bool ok() const {
    return duality + conjugation + grading + filtration + extension == 0;
  }
  RuleCheckStats& operator+=(const RuleCheckStats& o);
};

// Checks the coefficient rules on every face of the decorated diagram, up to
// max_faces (0 = no cap).
RuleCheckStats check_rules(const FaceContext& ctx, long max_faces = 0);

bool check_d_squared(const FaceContext& ctx);
// d(t') = d(t) + H_m d(t) + d(t) H_m for the single-bit flip at crossing m.
bool check_decoration_relation(const FaceContext& ctx, int m);
// G = id + H_m intertwines d(t) and d(t'), G^2 = id, and the homology ranks
// agree.
bool check_decoration_iso(const FaceContext& ctx, int m);
bool check_transverse_cycle(const FaceContext& ctx);

Decoration random_decoration(std::mt19937_64& rng, int n);
// Random braid closure with at most max_crossings crossings.
LinkDiagram random_braid_diagram(std::mt19937_64& rng, int max_crossings);

// delta-graded homology ranks of a subcomplex (shift applied).
std::map<int, int> subcomplex_delta_ranks(const FaceContext& ctx,
                                          const Subcomplex& sc);
std::vector<PageTable> subcomplex_pages(const FaceContext& ctx, const Subcomplex& sc);

}  // namespace khoss
