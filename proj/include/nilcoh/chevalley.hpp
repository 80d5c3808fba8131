#ifndef NILCOH_CHEVALLEY_HPP
#define NILCOH_CHEVALLEY_HPP

#include <vector>

#include "nilcoh/root_system.hpp"

namespace nilcoh {

/*
 * The nilpotent radical n in a Chevalley basis: one generator e_beta per
 * positive root, [e_a, e_b] = N(a,b) e_{a+b}.  Signs follow the extraspecial
 * pair convention relative to the canonical root order; the constructor
 * re-derives every other special pair from the extraspecial ones and then
 * verifies the Jacobi identity on all basis triples, aborting with the
 * offending triple if the table is inconsistent.
 */
class NilpotentAlgebra {
 public:
  explicit NilpotentAlgebra(const RootSystem& rs);

  const RootSystem& roots() const { return *rs_; }
  int dim() const { return rs_->num_positive(); }

  // [e_a, e_b] = n_const(a,b) e_{sum_index(a,b)}; zero when a+b is not a root
  long n_const(int a, int b) const { return n_[a][b]; }
  int sum_index(int a, int b) const { return sum_[a][b]; }

  // structure constant for [e_x, e_y] with signed roots x = +-root(ax),
  // y = +-root(ay), defined when x + y is a nonzero root
  Rat signed_const(int ax, bool aneg, int ay, bool bneg) const;

  long max_abs_n() const;

 private:
  const RootSystem* rs_;
  std::vector<std::vector<long>> n_;
  std::vector<std::vector<int>> sum_;

  // largest k with b - k a still a root
  int string_down(int b, int a) const;
  void jacobi_gate() const;
};

NilpotentAlgebra chevalley_constants(const RootSystem& rs);

// number of k-element subsets of the positive roots with the given sum
long long exterior_power_dims(const NilpotentAlgebra& alg, int k, const GradingVector& lambda);

// sum over k of (-1)^k exterior_power_dims(k, lambda)
long long exterior_euler(const NilpotentAlgebra& alg, const GradingVector& lambda);

}  // namespace nilcoh

#endif
