#include "nilcoh/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nilcoh {

void SparseMat::add(int r, int c, const Rat& v) {
  assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
  if (v == 0) return;
  auto& row = row_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

Rat SparseMat::at(int r, int c) const {
  const auto& row = row_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rat(0);
}

long SparseMat::nnz() const {
  long n = 0;
  for (const auto& r : row_) n += static_cast<long>(r.size());
  return n;
}

SparseMat SparseMat::operator*(const SparseMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("SparseMat: dimension mismatch in product");
  SparseMat out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    std::map<int, Rat> acc;
    for (const auto& [k, v] : row_[i])
      for (const auto& [j, w] : other.row_[k]) acc[j] += v * w;
    for (auto& [j, v] : acc)
      if (v != 0) out.row_[i].emplace_back(j, v);
  }
  return out;
}

SparseMat SparseMat::operator+(const SparseMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("SparseMat: dimension mismatch in sum");
  SparseMat out(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    std::map<int, Rat> acc;
    for (const auto& [j, v] : row_[i]) acc[j] += v;
    for (const auto& [j, v] : other.row_[i]) acc[j] += v;
    for (auto& [j, v] : acc)
      if (v != 0) out.row_[i].emplace_back(j, v);
  }
  return out;
}

SparseMat SparseMat::scaled(const Rat& s) const {
  SparseMat out(rows_, cols_);
  if (s == 0) return out;
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : row_[i]) out.row_[i].emplace_back(j, v * s);
  return out;
}

bool SparseMat::operator==(const SparseMat& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && row_ == other.row_;
}

namespace {

using IRow = std::vector<std::pair<int, Int>>;

// row <- (pivot_val * row - row_at_c * pivot_row) / prev, exact throughout
IRow bareiss_update(const IRow& row, const Int& row_at_c, const IRow& pivot_row,
                    const Int& pivot_val, const Int& prev, int pivot_col) {
  IRow out;
  out.reserve(row.size() + pivot_row.size());
  size_t a = 0, b = 0;
  Int num, q, r;
  while (a < row.size() || b < pivot_row.size()) {
    int ca = a < row.size() ? row[a].first : INT_MAX;
    int cb = b < pivot_row.size() ? pivot_row[b].first : INT_MAX;
    int c = std::min(ca, cb);
    num = 0;
    if (ca == c) num += pivot_val * row[a++].second;
    if (cb == c) num -= row_at_c * pivot_row[b++].second;
    if (c == pivot_col || num == 0) continue;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
    assert(r == 0);
    out.emplace_back(c, q);
  }
  return out;
}

}  // namespace

long rank_fraction_free(const SparseMat& m) {
  // scale rows to integers and strip content
  std::vector<IRow> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    const auto& r = m.row(i);
    if (r.empty()) continue;
    Int l = 1;
    for (const auto& [c, v] : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    IRow ir;
    ir.reserve(r.size());
    Int g = 0;
    for (const auto& [c, v] : r) {
      Int e = v.get_num() * (l / v.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
      ir.emplace_back(c, std::move(e));
    }
    if (g > 1)
      for (auto& [c, e] : ir) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    rows.push_back(std::move(ir));
  }

  long rank = 0;
  Int prev = 1;
  std::vector<int> colcount(m.cols());
  while (!rows.empty()) {
    std::fill(colcount.begin(), colcount.end(), 0);
    for (const auto& r : rows)
      for (const auto& [c, v] : r) ++colcount[c];

    size_t prow = 0;
    for (size_t i = 1; i < rows.size(); ++i)
      if (rows[i].size() < rows[prow].size()) prow = i;
    int pcol = -1;
    for (const auto& [c, v] : rows[prow])
      if (pcol < 0 || colcount[c] < colcount[pcol]) pcol = c;
    assert(pcol >= 0);

    IRow pivot_row = std::move(rows[prow]);
    rows.erase(rows.begin() + static_cast<long>(prow));
    Int pivot_val;
    for (const auto& [c, v] : pivot_row)
      if (c == pcol) pivot_val = v;

    std::vector<IRow> next;
    next.reserve(rows.size());
    for (auto& r : rows) {
      Int at_c = 0;
      for (const auto& [c, v] : r)
        if (c == pcol) at_c = v;
      IRow nr = bareiss_update(r, at_c, pivot_row, pivot_val, prev, pcol);
      if (!nr.empty()) next.push_back(std::move(nr));
    }
    rows = std::move(next);
    prev = pivot_val;
    ++rank;
  }
  return rank;
}

std::vector<long> block_ranks_serial(const std::vector<SparseMat>& blocks) {
  std::vector<long> out(blocks.size());
  for (size_t i = 0; i < blocks.size(); ++i) out[i] = rank_fraction_free(blocks[i]);
  return out;
}

std::vector<long> block_ranks_parallel(const std::vector<SparseMat>& blocks, int jobs) {
  if (jobs <= 1) return block_ranks_serial(blocks);
  std::vector<long> out(blocks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
  for (long i = 0; i < static_cast<long>(blocks.size()); ++i)
    out[i] = rank_fraction_free(blocks[i]);
  return out;
}

DenseMat DenseMat::from_sparse(const SparseMat& m) {
  DenseMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) out.at(i, j) = v;
  return out;
}

std::vector<int> rref(DenseMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

long rank_dense(DenseMat m) { return static_cast<long>(rref(m).size()); }

ColumnBasis column_basis(const DenseMat& m) {
  DenseMat red = m;
  ColumnBasis out;
  out.pivots = rref(red);
  out.coeff = DenseMat(static_cast<int>(out.pivots.size()), m.cols());
  // after rref, row k of the reduced matrix holds the coefficients of every
  // column over pivot column k
  for (size_t k = 0; k < out.pivots.size(); ++k)
    for (int j = 0; j < m.cols(); ++j) out.coeff.at(static_cast<int>(k), j) = red.at(static_cast<int>(k), j);
  return out;
}

DenseMat kernel_basis(const DenseMat& m) {
  DenseMat red = m;
  std::vector<int> pivots = rref(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  int nfree = m.cols() - static_cast<int>(pivots.size());
  DenseMat out(m.cols(), nfree);
  int k = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    out.at(c, k) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) out.at(pivots[r], k) = -red.at(static_cast<int>(r), c);
    ++k;
  }
  return out;
}

}  // namespace nilcoh
