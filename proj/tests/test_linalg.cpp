#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nilcoh/linalg.hpp"

using namespace nilcoh;

namespace {

// deterministic small-rational matrix generator
SparseMat random_matrix(int rows, int cols, unsigned seed, int density_pct) {
  SparseMat m(rows, cols);
  unsigned state = seed;
  auto next = [&] {
    state = state * 1664525u + 1013904223u;
    return state >> 8;
  };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (static_cast<int>(next() % 100) >= density_pct) continue;
      int num = static_cast<int>(next() % 19) - 9;
      int den = 1 + static_cast<int>(next() % 4);
      if (num != 0) m.add(r, c, make_rat(num, den));
    }
  return m;
}

}  // namespace

TEST_CASE("rank of identity and zero") {
  SparseMat id(4, 4);
  for (int i = 0; i < 4; ++i) id.add(i, i, Rat(1));
  CHECK(rank_fraction_free(id) == 4);
  CHECK(rank_fraction_free(SparseMat(5, 7)) == 0);
}

TEST_CASE("rank of a known singular matrix") {
  // rows 0 and 2 proportional
  SparseMat m(3, 3);
  m.add(0, 0, Rat(1));
  m.add(0, 1, Rat(2));
  m.add(1, 1, Rat(1));
  m.add(1, 2, Rat(-1));
  m.add(2, 0, Rat(3));
  m.add(2, 1, Rat(6));
  CHECK(rank_fraction_free(m) == 2);
}

TEST_CASE("fraction-free rank agrees with dense elimination") {
  for (unsigned seed = 1; seed <= 12; ++seed) {
    SparseMat m = random_matrix(9, 7, seed, 40);
    CHECK(rank_fraction_free(m) == rank_dense(DenseMat::from_sparse(m)));
  }
}

TEST_CASE("parallel block driver matches the serial reference") {
  std::vector<SparseMat> blocks;
  for (unsigned seed = 1; seed <= 20; ++seed) blocks.push_back(random_matrix(12, 10, seed, 30));
  CHECK(block_ranks_serial(blocks) == block_ranks_parallel(blocks, 2));
  CHECK(block_ranks_serial(blocks) == block_ranks_parallel(blocks, 4));
}

TEST_CASE("kernel basis spans the kernel") {
  SparseMat m = random_matrix(6, 9, 7, 45);
  DenseMat d = DenseMat::from_sparse(m);
  DenseMat ker = kernel_basis(d);
  CHECK(ker.cols() == 9 - rank_dense(d));
  for (int k = 0; k < ker.cols(); ++k)
    for (int r = 0; r < 6; ++r) {
      Rat s = 0;
      for (int c = 0; c < 9; ++c) s += d.at(r, c) * ker.at(c, k);
      CHECK(s == 0);
    }
}

TEST_CASE("column basis expresses every column") {
  SparseMat m = random_matrix(8, 6, 3, 50);
  DenseMat d = DenseMat::from_sparse(m);
  ColumnBasis cb = column_basis(d);
  for (int j = 0; j < d.cols(); ++j)
    for (int r = 0; r < d.rows(); ++r) {
      Rat s = 0;
      for (size_t k = 0; k < cb.pivots.size(); ++k)
        s += d.at(r, cb.pivots[k]) * cb.coeff.at(static_cast<int>(k), j);
      CHECK(s == d.at(r, j));
    }
}
