#ifndef NILCOH_LINALG_HPP
#define NILCOH_LINALG_HPP

#include <utility>
#include <vector>

#include "nilcoh/numeric.hpp"

namespace nilcoh {

// Sparse matrix over Q, row-major with sorted zero-free rows.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int r, int c, const Rat& v);
  Rat at(int r, int c) const;
  const std::vector<std::pair<int, Rat>>& row(int r) const { return row_[r]; }

  long nnz() const;
  bool is_zero() const { return nnz() == 0; }

  SparseMat operator*(const SparseMat& other) const;
  SparseMat operator+(const SparseMat& other) const;
  SparseMat scaled(const Rat& s) const;
  bool operator==(const SparseMat& other) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<std::pair<int, Rat>>> row_;
};

/*
 * Exact rank by fraction-free (Bareiss) elimination.
 *
 * Rows are first scaled to integers (rank-invariant), then eliminated with
 * the two-term Sylvester update M[i][j] <- (M[i][j]*p - M[i][c]*M[p][j])/prev,
 * all divisions exact.  Pivots are chosen to limit fill: the sparsest
 * remaining row, then the entry whose column meets the fewest rows.
 */
long rank_fraction_free(const SparseMat& m);

// Rank of every block; the parallel driver and the serial reference must
// agree entry-for-entry (checked in the tests and the benchmark).
std::vector<long> block_ranks_serial(const std::vector<SparseMat>& blocks);
std::vector<long> block_ranks_parallel(const std::vector<SparseMat>& blocks, int jobs);

// Dense matrix over Q for the small solves (quotient coordinates, kernels).
class DenseMat {
 public:
  DenseMat() = default;
  DenseMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  static DenseMat from_sparse(const SparseMat& m);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<int> rref(DenseMat& m);

long rank_dense(DenseMat m);

// Column-space coordinates: pivot columns P of m, plus for every column j the
// coefficients expressing column_j over the pivot columns.  coeff is |P| x cols.
struct ColumnBasis {
  std::vector<int> pivots;
  DenseMat coeff;
};
ColumnBasis column_basis(const DenseMat& m);

// Basis of the right kernel, one column per basis vector.
DenseMat kernel_basis(const DenseMat& m);

}  // namespace nilcoh

#endif
