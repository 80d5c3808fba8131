#ifndef NILCOH_BAR_KOSZUL_HPP
#define NILCOH_BAR_KOSZUL_HPP

#include <vector>

#include "nilcoh/chevalley.hpp"

namespace nilcoh {

/*
 * Fiber model of the bar-Koszul bicomplex at a point of the grading cone.
 * Column m holds one tensor factor per entry of a composition of lambda into
 * m nonzero parts; each factor is the corresponding weight piece of the
 * exterior algebra of n.  The vertical differential is the Chevalley boundary
 * on one factor, the horizontal one splits a factor along the exterior
 * comultiplication; total degree of an element is sum of exterior degrees
 * minus the number of factors.  Both differentials square to zero and
 * anticommute, checked exactly at build time.
 */
class BarKoszulComplex {
 public:
  struct Elem {
    std::vector<uint32_t> factors;  // nonempty subsets of the positive roots
  };

  BarKoszulComplex(const NilpotentAlgebra& alg, const GradingVector& lambda);

  const NilpotentAlgebra& algebra() const { return *alg_; }
  const GradingVector& lambda() const { return lambda_; }

  int max_degree() const { return static_cast<int>(terms_.size()) - 1; }
  long term_dim(int t) const;
  const std::vector<Elem>& term(int t) const { return terms_[t]; }

  // C_t -> C_{t-1}
  const SparseMat& vertical(int t) const { return vert_[t]; }
  const SparseMat& horizontal(int t) const { return hor_[t]; }
  SparseMat total(int t) const { return vert_[t] + hor_[t]; }

  std::vector<long> column_dims() const;  // dimension per column m

 private:
  const NilpotentAlgebra* alg_;
  GradingVector lambda_;
  std::vector<std::vector<Elem>> terms_;  // per total degree
  std::vector<SparseMat> vert_, hor_;
};

BarKoszulComplex build_bar_koszul(const NilpotentAlgebra& alg, const GradingVector& lambda);

struct FiberReport {
  GradingVector lambda;
  std::vector<long> column_dims;
  std::vector<std::pair<int, long>> homology;  // (degree, dim), nonzero only
  bool concentrated = false;
  int degree = -1;
  long long expected_dim = 0;  // kostant partition value
  bool augmentation_onto = false;
  bool augmentation_chain_map = false;
  bool pass = false;
};

// homology of the total complex plus the product-map augmentation onto the
// weight piece of the enveloping algebra
FiberReport fiber_quasi_iso_check(const NilpotentAlgebra& alg, const GradingVector& lambda);

struct InversionReport {
  struct Row {
    GradingVector lambda;
    long long convolution;  // sum p(l1) eps(l2) over splittings
    bool pass;
  };
  bool pass = true;
  std::vector<Row> rows;
};

// sum_{l1+l2=l} p(l1) eps(l2) = delta_{l,0} for all |l| <= bound
InversionReport character_inversion(const RootSystem& rs, int bound);

// signed count of subsets of the positive roots with the given sum
long long subset_euler(const RootSystem& rs, const GradingVector& lambda);

}  // namespace nilcoh

#endif
