#include "doctest.h"
#include "khoss/f2.hpp"

#include <random>

using namespace khoss;

TEST_CASE("rank basics") {
  F2Matrix z(5, 7);
  CHECK(z.rank() == 0);
  CHECK(F2Matrix::identity(5).rank() == 5);

  F2Matrix m(3, 3);
  m.set(0, 0, true);
  m.set(1, 1, true);
  m.set(0, 2, true);
  m.set(1, 2, true);
  CHECK(m.rank() == 2);
}

TEST_CASE("rank equals rank of transpose on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    F2Matrix m(64, 64);
    for (int c = 0; c < 64; ++c)
      for (int r = 0; r < 64; ++r)
        if (rng() & 1) m.set(r, c, true);
    CHECK(m.rank() == m.transposed().rank());
  }
}

TEST_CASE("kernel basis spans the kernel") {
  std::mt19937_64 rng(11);
  F2Matrix m(10, 16);
  for (int c = 0; c < 16; ++c)
    for (int r = 0; r < 10; ++r)
      if (rng() & 1) m.set(r, c, true);
  F2Matrix ker = m.kernel_basis();
  CHECK(ker.cols() == 16 - m.rank());
  F2Matrix img = m.multiplied(ker);
  CHECK(img.is_zero());
  CHECK(ker.rank() == ker.cols());
}

TEST_CASE("sparse map algebra") {
  // d: e0 -> e1 + e2, e1 -> e3, e2 -> e3
  SparseMapF2 d = SparseMapF2::from_entries(4, 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(d.entry_count() == 4);
  CHECK(d.compose(d).is_zero());
  CHECK(d.transposed().transposed() == d);
  CHECK(d.apply({0}) == std::vector<int>{1, 2});
  CHECK(d.apply({1, 2}).empty());

  // duplicate entries cancel
  SparseMapF2 e = SparseMapF2::from_entries(2, 2, {{0, 1}, {0, 1}});
  CHECK(e.is_zero());
}
