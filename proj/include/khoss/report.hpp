#pragma once

#include <map>
#include <string>
#include <vector>

#include "khoss/f2.hpp"
#include "khoss/homology.hpp"

namespace khoss {

struct ComputeReport {
  std::string theory;
  std::string input;
  std::map<int, int> delta_ranks;
  std::map<std::pair<int, int>, int> bigraded;  // (h, q), khovanov only
  std::vector<PageTable> pages;
  bool has_bigraded = false;
  bool has_pages = false;
};

std::string render_report(const ComputeReport& r, const std::string& format);
// one line per column: "col: r1 r2 r3 ..."
std::string render_matrix(const SparseMapF2& m);

}  // namespace khoss
