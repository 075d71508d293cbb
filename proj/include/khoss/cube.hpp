#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "khoss/diagram.hpp"

namespace khoss {

// One orientation bit per crossing for the 0-resolution surgery arc. Bit 0
// points the arc out of the smoothing strand containing the crossing's first
// PD edge; bit 1 is the reverse.
struct Decoration {
  uint32_t bits = 0;
  int n = 0;
  bool bit(int i) const { return (bits >> i) & 1; }
  Decoration flipped(int i) const { return {bits ^ (uint32_t(1) << i), n}; }
};

// Smoothing strands at a crossing: strand 0 contains slot 0. For the
// 0-smoothing the strands pair slots {0,3} and {1,2}; for the 1-smoothing
// {0,1} and {2,3}.
inline int strand_partner_slot(int res_bit, int slot) {
  static const int p0[4] = {3, 2, 1, 0};
  static const int p1[4] = {1, 0, 3, 2};
  return res_bit ? p1[slot] : p0[slot];
}
inline int strand_index(int res_bit, int slot) {
  return res_bit ? (slot >= 2) : (slot == 1 || slot == 2);
}

// Side on which the surgery arc (0-smoothing) or its dual (1-smoothing)
// leaves the strand, relative to the direction of travel that enters the
// crossing at `enter_slot`. true = left.
inline bool arc_side_left(int res_bit, int enter_slot) {
  if (res_bit == 0) return enter_slot == 3 || enter_slot == 1;
  return enter_slot == 0 || enter_slot == 2;
}

struct ResCircle {
  int id = 0;                // minimal traversed PD edge label
  std::vector<int> edges;    // labels in traversal order
  struct Visit {
    int crossing;
    int strand;      // 0/1, see strand_index
    int enter_slot;  // slot by which the traversal enters the crossing
  };
  std::vector<Visit> visits;  // traversal order, aligned with segment starts
};

struct Resolution {
  uint32_t bits = 0;
  int weight = 0;
  std::vector<ResCircle> circles;  // sorted by id
  // (crossing, strand) -> circle index / visit position within that circle
  std::vector<std::array<int, 2>> strand_circle;
  std::vector<std::array<int, 2>> strand_visit;
  std::map<int, int> circle_of_edge;

  int circle_count() const { return (int)circles.size(); }
  int circle_index_of_id(int id) const;
};

Resolution resolve(const LinkDiagram& d, uint32_t bits);

// Memoized table of all 2^n resolutions.
class ResolutionTable {
public:
  explicit ResolutionTable(const LinkDiagram& d);
  const Resolution& get(uint32_t bits) const { return table_[bits]; }
  const LinkDiagram& diagram() const { return *d_; }

private:
  const LinkDiagram* d_;
  std::vector<Resolution> table_;
};

// All faces (I, J) with I < J differing at exactly k coordinates.
void for_each_face(int n, int k,
                   const std::function<void(uint32_t I, uint32_t J,
                                            const std::vector<int>& coords)>& fn);
void for_each_face_alldim(
    int n, const std::function<void(uint32_t I, uint32_t J,
                                    const std::vector<int>& coords)>& fn);

struct Generator {
  uint32_t I = 0;
  uint32_t mono = 0;  // bit j set: variable of the j-th circle (by id order) divides
  int h = 0, q = 0, delta = 0;
};

// Global generator basis ordered by (|I|, I, mono).
class Basis {
public:
  Basis(const LinkDiagram& d, const ResolutionTable& rt);
  int size() const { return (int)gens_.size(); }
  const Generator& gen(int i) const { return gens_[i]; }
  int index_of(uint32_t I, uint32_t mono) const {
    return offset_[I] + (int)mono;
  }
  const std::vector<int>& by_delta(int delta) const;
  std::vector<int> deltas() const;

private:
  std::vector<Generator> gens_;
  std::vector<int> offset_;  // by resolution bits
  std::map<int, std::vector<int>> delta_index_;
};

int grading_gr(uint32_t mono, int circle_count);

Decoration braid_decoration(const LinkDiagram& d);
Decoration parse_decoration(const std::string& spec, const LinkDiagram& d);

}  // namespace khoss
