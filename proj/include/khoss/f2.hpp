#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace khoss {

// Dense GF(2) matrix, bit-packed column-major.
class F2Matrix {
public:
  F2Matrix() = default;
  F2Matrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const;
  void set(int r, int c, bool v);
  void flip(int r, int c);
  void xor_col(int dst, int src);  // col[dst] ^= col[src]
  bool col_empty(int c) const;
  int col_low(int c) const;  // lowest set row of column c, -1 if empty

  static F2Matrix identity(int n);
  F2Matrix transposed() const;
  F2Matrix multiplied(const F2Matrix& rhs) const;  // this * rhs
  // Horizontal concatenation [this | rhs]; row counts must match.
  F2Matrix hconcat(const F2Matrix& rhs) const;

  int rank() const;
  // Columns spanning the null space of this matrix.
  F2Matrix kernel_basis() const;

  bool is_zero() const;
  bool operator==(const F2Matrix& o) const;

private:
  int rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<uint64_t> bits_;
  uint64_t* col_ptr(int c) { return bits_.data() + (size_t)c * words_; }
  const uint64_t* col_ptr(int c) const { return bits_.data() + (size_t)c * words_; }
};

// Sparse GF(2) map between indexed bases; per-column sorted row lists,
// coefficients mod 2 (a present row means coefficient 1).
class SparseMapF2 {
public:
  SparseMapF2() = default;
  SparseMapF2(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<int>& column(int c) const { return col_[c]; }

  // Deterministic bulk construction: entries appearing an even number of
  // times cancel.
  static SparseMapF2 from_entries(int rows, int cols,
                                  std::vector<std::pair<int, int>> col_row);

  SparseMapF2 plus(const SparseMapF2& o) const;
  SparseMapF2 compose(const SparseMapF2& first) const;  // this ∘ first
  SparseMapF2 transposed() const;
  bool is_zero() const;
  bool operator==(const SparseMapF2& o) const;
  size_t entry_count() const;

  // apply to a sparse vector (sorted indices) -> sorted indices
  std::vector<int> apply(const std::vector<int>& v) const;

  // Dense submatrix on given row/col index subsets. row_pos maps global row
  // index -> position in rows subset, -1 if excluded.
  F2Matrix dense_submatrix(const std::vector<int>& row_pos, int sub_rows,
                           const std::vector<int>& cols) const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<int>> col_;
};

// XOR-merge of two sorted index lists (symmetric difference).
std::vector<int> xor_sorted(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace khoss
