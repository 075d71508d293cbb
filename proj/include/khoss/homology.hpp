#pragma once

#include <map>
#include <vector>

#include "khoss/f2.hpp"

namespace khoss {

// Rank table of one page of the spectral sequence, indexed by (h, delta).
struct PageTable {
  int r = 0;
  std::map<std::pair<int, int>, int> ranks;
  bool stabilized = false;
  int total() const;
  std::map<int, int> delta_totals() const;
};

// Homology of a delta-homogeneous degree -2 differential, per delta level.
std::map<int, int> delta_homology(const std::vector<int>& delta_of,
                                  const SparseMapF2& d);

// Homology of an (h, q)-bigraded complex whose differential shifts h by one
// and preserves q.
std::map<std::pair<int, int>, int> bigraded_homology(
    const std::vector<std::pair<int, int>>& hq_of, const SparseMapF2& d1);

// Pages E_1 .. E_{r_max} of the spectral sequence induced by the filtration
// by homological degree. d must strictly increase h and lower delta by 2.
std::vector<PageTable> spectral_pages(const std::vector<int>& h_of,
                                      const std::vector<int>& delta_of,
                                      const SparseMapF2& d, int r_max);

}  // namespace khoss
