#include "khoss/f2.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace khoss {

F2Matrix::F2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((rows + 63) / 64) {
  bits_.assign((size_t)words_ * cols_, 0);
}

bool F2Matrix::get(int r, int c) const {
  return (col_ptr(c)[r >> 6] >> (r & 63)) & 1;
}

void F2Matrix::set(int r, int c, bool v) {
  uint64_t mask = uint64_t(1) << (r & 63);
  if (v)
    col_ptr(c)[r >> 6] |= mask;
  else
    col_ptr(c)[r >> 6] &= ~mask;
}

void F2Matrix::flip(int r, int c) { col_ptr(c)[r >> 6] ^= uint64_t(1) << (r & 63); }

void F2Matrix::xor_col(int dst, int src) {
  uint64_t* d = col_ptr(dst);
  const uint64_t* s = col_ptr(src);
  for (int w = 0; w < words_; ++w) d[w] ^= s[w];
}

bool F2Matrix::col_empty(int c) const {
  const uint64_t* p = col_ptr(c);
  for (int w = 0; w < words_; ++w)
    if (p[w]) return false;
  return true;
}

int F2Matrix::col_low(int c) const {
  const uint64_t* p = col_ptr(c);
  for (int w = 0; w < words_; ++w)
    if (p[w]) return w * 64 + __builtin_ctzll(p[w]);
  return -1;
}

F2Matrix F2Matrix::identity(int n) {
  F2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Matrix F2Matrix::transposed() const {
  F2Matrix t(cols_, rows_);
  for (int c = 0; c < cols_; ++c) {
    const uint64_t* p = col_ptr(c);
    for (int w = 0; w < words_; ++w) {
      uint64_t word = p[w];
      while (word) {
        int b = __builtin_ctzll(word);
        word &= word - 1;
        t.set(c, w * 64 + b, true);
      }
    }
  }
  return t;
}

F2Matrix F2Matrix::multiplied(const F2Matrix& rhs) const {
  assert(cols_ == rhs.rows_);
  F2Matrix out(rows_, rhs.cols_);
  for (int c = 0; c < rhs.cols_; ++c) {
    uint64_t* dst = out.col_ptr(c);
    for (int k = 0; k < cols_; ++k)
      if (rhs.get(k, c)) {
        const uint64_t* src = col_ptr(k);
        for (int w = 0; w < words_; ++w) dst[w] ^= src[w];
      }
  }
  return out;
}

F2Matrix F2Matrix::hconcat(const F2Matrix& rhs) const {
  assert(rows_ == rhs.rows_);
  F2Matrix out(rows_, cols_ + rhs.cols_);
  std::copy(bits_.begin(), bits_.end(), out.bits_.begin());
  std::copy(rhs.bits_.begin(), rhs.bits_.end(),
            out.bits_.begin() + (size_t)words_ * cols_);
  return out;
}

int F2Matrix::rank() const {
  F2Matrix m(*this);
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < m.cols_; ++c) {
    int low = m.col_low(c);
    while (low >= 0) {
      bool reduced = false;
      for (int pc : pivot_col) {
        if (m.col_low(pc) == low) {
          m.xor_col(c, pc);
          low = m.col_low(c);
          reduced = true;
          break;
        }
      }
      if (!reduced) break;
    }
    if (low >= 0) {
      pivot_col.push_back(c);
      ++rank;
    }
  }
  return rank;
}

F2Matrix F2Matrix::kernel_basis() const {
  // Column-reduce [M; I]; kernel vectors are the I-parts of zeroed columns.
  F2Matrix m(*this);
  F2Matrix track = F2Matrix::identity(cols_);
  std::vector<int> pivot_col;
  std::vector<int> null_cols;
  for (int c = 0; c < cols_; ++c) {
    int low = m.col_low(c);
    while (low >= 0) {
      bool reduced = false;
      for (int pc : pivot_col) {
        if (m.col_low(pc) == low) {
          m.xor_col(c, pc);
          track.xor_col(c, pc);
          low = m.col_low(c);
          reduced = true;
          break;
        }
      }
      if (!reduced) break;
    }
    if (low >= 0)
      pivot_col.push_back(c);
    else
      null_cols.push_back(c);
  }
  F2Matrix out(cols_, (int)null_cols.size());
  for (int j = 0; j < (int)null_cols.size(); ++j)
    for (int r = 0; r < cols_; ++r)
      if (track.get(r, null_cols[j])) out.set(r, j, true);
  return out;
}

bool F2Matrix::is_zero() const {
  for (uint64_t w : bits_)
    if (w) return false;
  return true;
}

bool F2Matrix::operator==(const F2Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
}

std::vector<int> xor_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

SparseMapF2 SparseMapF2::from_entries(int rows, int cols,
                                      std::vector<std::pair<int, int>> col_row) {
  SparseMapF2 m(rows, cols);
  std::sort(col_row.begin(), col_row.end());
  size_t i = 0;
  while (i < col_row.size()) {
    size_t j = i;
    while (j < col_row.size() && col_row[j] == col_row[i]) ++j;
    if ((j - i) & 1) m.col_[col_row[i].first].push_back(col_row[i].second);
    i = j;
  }
  return m;
}

SparseMapF2 SparseMapF2::plus(const SparseMapF2& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  SparseMapF2 out(rows_, cols_);
  for (int c = 0; c < cols_; ++c) out.col_[c] = xor_sorted(col_[c], o.col_[c]);
  return out;
}

SparseMapF2 SparseMapF2::compose(const SparseMapF2& first) const {
  assert(cols_ == first.rows_);
  SparseMapF2 out(rows_, first.cols_);
  for (int c = 0; c < first.cols_; ++c) {
    std::vector<int> acc;
    for (int mid : first.col_[c]) acc = xor_sorted(acc, col_[mid]);
    out.col_[c] = std::move(acc);
  }
  return out;
}

SparseMapF2 SparseMapF2::transposed() const {
  SparseMapF2 out(cols_, rows_);
  for (int c = 0; c < cols_; ++c)
    for (int r : col_[c]) out.col_[r].push_back(c);
  for (auto& v : out.col_) std::sort(v.begin(), v.end());
  return out;
}

bool SparseMapF2::is_zero() const {
  for (const auto& v : col_)
    if (!v.empty()) return false;
  return true;
}

bool SparseMapF2::operator==(const SparseMapF2& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && col_ == o.col_;
}

size_t SparseMapF2::entry_count() const {
  size_t n = 0;
  for (const auto& v : col_) n += v.size();
  return n;
}

std::vector<int> SparseMapF2::apply(const std::vector<int>& v) const {
  std::vector<int> acc;
  for (int c : v) acc = xor_sorted(acc, col_[c]);
  return acc;
}

F2Matrix SparseMapF2::dense_submatrix(const std::vector<int>& row_pos, int sub_rows,
                                      const std::vector<int>& cols) const {
  F2Matrix out(sub_rows, (int)cols.size());
  for (int j = 0; j < (int)cols.size(); ++j)
    for (int r : col_[cols[j]]) {
      int rp = row_pos[r];
      if (rp >= 0) out.set(rp, j, true);
    }
  return out;
}

}  // namespace khoss
