#include "khoss/homology.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace khoss {

int PageTable::total() const {
  int t = 0;
  for (const auto& [k, v] : ranks) {
    (void)k;
    t += v;
  }
  return t;
}

std::map<int, int> PageTable::delta_totals() const {
  std::map<int, int> out;
  for (const auto& [k, v] : ranks) out[k.second] += v;
  return out;
}

namespace {

// rank of d restricted to given column indices against given row indices
int restricted_rank(const SparseMapF2& d, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  std::vector<int> row_pos(d.rows(), -1);
  for (int i = 0; i < (int)rows.size(); ++i) row_pos[rows[i]] = i;
  return d.dense_submatrix(row_pos, (int)rows.size(), cols).rank();
}

}  // namespace

std::map<int, int> delta_homology(const std::vector<int>& delta_of,
                                  const SparseMapF2& d) {
  std::map<int, std::vector<int>> levels;
  for (int i = 0; i < (int)delta_of.size(); ++i) levels[delta_of[i]].push_back(i);
  std::map<int, int> out;
  for (const auto& [delta, gens] : levels) {
    auto below = levels.find(delta - 2);
    auto above = levels.find(delta + 2);
    static const std::vector<int> none;
    const std::vector<int>& rows = below == levels.end() ? none : below->second;
    const std::vector<int>& pre = above == levels.end() ? none : above->second;
    int boundary_out = restricted_rank(d, rows, gens);
    int boundary_in = restricted_rank(d, gens, pre);
    int h = (int)gens.size() - boundary_out - boundary_in;
    if (h < 0) throw std::runtime_error("negative homology rank; d*d != 0?");
    if (h > 0) out[delta] = h;
  }
  return out;
}

std::map<std::pair<int, int>, int> bigraded_homology(
    const std::vector<std::pair<int, int>>& hq_of, const SparseMapF2& d1) {
  std::map<std::pair<int, int>, std::vector<int>> levels;  // key (q, h)
  for (int i = 0; i < (int)hq_of.size(); ++i)
    levels[{hq_of[i].second, hq_of[i].first}].push_back(i);
  std::map<std::pair<int, int>, int> out;  // key (h, q)
  for (const auto& [qh, gens] : levels) {
    auto [q, h] = qh;
    auto next = levels.find({q, h + 1});
    auto prev = levels.find({q, h - 1});
    static const std::vector<int> none;
    int out_rank =
        restricted_rank(d1, next == levels.end() ? none : next->second, gens);
    int in_rank =
        restricted_rank(d1, gens, prev == levels.end() ? none : prev->second);
    int rank = (int)gens.size() - out_rank - in_rank;
    if (rank < 0) throw std::runtime_error("negative Khovanov rank");
    if (rank > 0) out[{h, q}] = rank;
  }
  return out;
}

namespace {

// Materialized basis of Z_r^p on one delta line: vectors in the coordinates
// of that line, spanning  F_p ∩ d^{-1} F_{p+r}.
struct LineData {
  std::vector<int> gens;      // global indices, grouped by the line's delta
  std::vector<int> h;         // h per local index
  std::vector<int> pos;       // global -> local (-1 outside)
};

F2Matrix z_basis(const SparseMapF2& d, const LineData& line,
                 const LineData& line_below, int p, int r) {
  // columns: generators of the line with h >= p
  std::vector<int> cols;
  for (int i = 0; i < (int)line.gens.size(); ++i)
    if (line.h[i] >= p) cols.push_back(line.gens[i]);
  // rows: generators one delta step down with h < p + r
  std::vector<int> row_pos(d.rows(), -1);
  int nr = 0;
  for (int i = 0; i < (int)line_below.gens.size(); ++i)
    if (line_below.h[i] < p + r) row_pos[line_below.gens[i]] = nr++;
  F2Matrix m = d.dense_submatrix(row_pos, nr, cols);
  F2Matrix ker = m.kernel_basis();  // coordinates: cols
  // lift to the full line coordinate space
  F2Matrix out((int)line.gens.size(), ker.cols());
  for (int j = 0; j < ker.cols(); ++j)
    for (int i = 0; i < (int)cols.size(); ++i)
      if (ker.get(i, j)) out.set(line.pos[cols[i]], j, true);
  return out;
}

}  // namespace

std::vector<PageTable> spectral_pages(const std::vector<int>& h_of,
                                      const std::vector<int>& delta_of,
                                      const SparseMapF2& d, int r_max) {
  int N = (int)h_of.size();
  std::set<int> deltas(delta_of.begin(), delta_of.end());
  std::map<int, LineData> lines;
  for (int delta : deltas) {
    LineData& ld = lines[delta];
    ld.pos.assign(N, -1);
    for (int i = 0; i < N; ++i)
      if (delta_of[i] == delta) {
        ld.pos[i] = (int)ld.gens.size();
        ld.gens.push_back(i);
        ld.h.push_back(h_of[i]);
      }
  }
  int hmin = 0, hmax = 0;
  if (N) {
    hmin = *std::min_element(h_of.begin(), h_of.end());
    hmax = *std::max_element(h_of.begin(), h_of.end());
  }
  static const LineData empty_line;

  // dense d restricted between consecutive delta lines, in line coordinates
  auto line_or_empty = [&](int delta) -> const LineData& {
    auto it = lines.find(delta);
    return it == lines.end() ? empty_line : it->second;
  };
  auto d_between = [&](const LineData& src, const LineData& dst) -> F2Matrix {
    std::vector<int> row_pos(N, -1);
    for (int i = 0; i < (int)dst.gens.size(); ++i) row_pos[dst.gens[i]] = i;
    return d.dense_submatrix(row_pos, (int)dst.gens.size(), src.gens);
  };

  std::vector<PageTable> pages;
  for (int r = 1; r <= r_max; ++r) {
    PageTable page;
    page.r = r;
    for (int delta : deltas) {
      const LineData& line = lines[delta];
      const LineData& below = line_or_empty(delta - 2);
      const LineData& above = line_or_empty(delta + 2);
      F2Matrix d_from_above;
      if (!above.gens.empty()) d_from_above = d_between(above, line);
      for (int p = hmin; p <= hmax; ++p) {
        bool has_gen = false;
        for (int i = 0; i < (int)line.gens.size() && !has_gen; ++i)
          has_gen = line.h[i] == p;
        if (!has_gen) continue;
        F2Matrix z = z_basis(d, line, below, p, r);
        F2Matrix zb1 = z_basis(d, line, below, p + 1, r - 1);
        F2Matrix den;
        if (above.gens.empty()) {
          den = zb1;
        } else {
          F2Matrix za = z_basis(d, above, line, p - r + 1, r - 1);
          den = zb1.hconcat(d_from_above.multiplied(za));
        }
        int dim = z.cols() - den.rank();
        if (dim < 0) throw std::runtime_error("negative page rank");
        if (dim > 0) page.ranks[{p, delta}] = dim;
      }
    }
    pages.push_back(std::move(page));
  }
  for (auto& page : pages)
    page.stabilized = page.ranks == pages.back().ranks;
  return pages;
}

}  // namespace khoss
