#ifndef NILCOH_CE_HPP
#define NILCOH_CE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "nilcoh/module.hpp"

namespace nilcoh {

/*
 * Cochain complex Lambda^k(n^*) (x) V with the standard differential; every
 * differential preserves the weight, so the complex splits into weight
 * blocks.  d.d = 0 is checked exactly at build time, as is compatibility of
 * the coefficient action with the bracket.
 */
class ChainComplex {
 public:
  struct BasisElem {
    uint32_t mask;  // subset of the positive roots
    int vec;        // module basis index (0 for trivial coefficients)
    Weight wt;
  };
  struct WeightBlock {
    Weight wt;
    std::vector<std::vector<int>> idx;  // per degree, positions into term k
  };

  ChainComplex(const NilpotentAlgebra& alg, const HighestWeightModule* coeffs);

  const NilpotentAlgebra& algebra() const { return *alg_; }
  int top_degree() const { return alg_->dim(); }
  long term_dim(int k) const { return static_cast<long>(basis_[k].size()); }
  const std::vector<BasisElem>& term(int k) const { return basis_[k]; }
  const SparseMat& differential(int k) const { return d_[k]; }  // C^k -> C^{k+1}
  const std::vector<WeightBlock>& blocks() const { return blocks_; }
  SparseMat block_differential(int block, int k) const;

 private:
  const NilpotentAlgebra* alg_;
  const HighestWeightModule* coeffs_;
  std::vector<std::vector<BasisElem>> basis_;
  std::vector<SparseMat> d_;
  std::vector<WeightBlock> blocks_;
};

ChainComplex ce_complex(const NilpotentAlgebra& alg, const HighestWeightModule* coeffs = nullptr);

struct CohomologyReport {
  struct Row {
    int degree;
    Weight weight;
    long dim;
  };
  std::vector<Row> rows;  // nonzero dims, sorted by (degree, weight)

  long dim_at(int k) const;
  std::vector<std::pair<Weight, long>> weights_at(int k) const;
  nlohmann::json to_json(const RootSystem& rs, const std::string& type_name,
                         const std::string& eta_label) const;
  std::string to_csv(const RootSystem& rs, const std::string& type_name,
                     const std::string& eta_label) const;
};

// exact homology of the weight blocks; jobs > 1 runs the blocks through the
// OpenMP rank driver, the result does not depend on jobs
CohomologyReport cohomology(const ChainComplex& cx, int jobs = 1);

// {w . eta : l(w) = k}, sorted
std::vector<Weight> kostant_oracle(const RootSystem& rs, const Weight& eta, int k);

struct KostantReport {
  bool pass = false;
  std::vector<std::string> mismatches;
  CohomologyReport cohom;
};
KostantReport verify_kostant(const NilpotentAlgebra& alg, const Weight& eta, int jobs = 1);

struct CobracketReport {
  long kernel_dim = 0;
  bool equals_simple_duals = false;
  std::vector<std::vector<Rat>> basis;  // coordinates over the dual root basis
};
CobracketReport cobracket_kernel(const NilpotentAlgebra& alg);

struct H2Report {
  bool pass = false;
  // weight, has the form -a_i - s_i(a_j), is not a root
  std::vector<std::tuple<Weight, bool, bool>> weights;
};
H2Report h2_weight_lemma(const NilpotentAlgebra& alg);

}  // namespace nilcoh

#endif
