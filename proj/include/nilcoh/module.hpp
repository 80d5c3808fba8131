#ifndef NILCOH_MODULE_HPP
#define NILCOH_MODULE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "nilcoh/chevalley.hpp"
#include "nilcoh/graded.hpp"
#include "nilcoh/linalg.hpp"

namespace nilcoh {

/*
 * Irreducible module of a dominant integral highest weight, built as the
 * Verma module truncated to the weight box and reduced modulo the radical of
 * the contravariant form on each weight space.  Basis vectors are classes of
 * PBW monomials in the negative root vectors, taken in decreasing canonical
 * root order; the operator matrices are exact.
 *
 * The constructor certifies the result: the Serre-type relations
 * [h_i,e_j] = a_ij e_j, [h_i,f_j] = -a_ij f_j, [e_i,f_j] = delta_ij h_i hold
 * as matrix identities, and the total dimension equals the Weyl dimension
 * formula.
 */
class HighestWeightModule {
 public:
  HighestWeightModule(const NilpotentAlgebra& alg, const Weight& eta);

  const RootSystem& roots() const { return *rs_; }
  const NilpotentAlgebra& algebra() const { return *alg_; }
  const Weight& highest_weight() const { return eta_; }

  long dim() const { return dim_; }
  const std::vector<Weight>& weights() const { return weights_; }  // with multiplicity ranges
  long weight_dim(const Weight& w) const;
  const Weight& basis_weight(int b) const { return weights_[basis_weight_idx_[b]]; }

  // full-dimension operator matrices
  const SparseMat& op_pos(int root_idx) const { return e_ops_[root_idx]; }  // e_beta
  const SparseMat& op_neg(int root_idx) const { return f_ops_[root_idx]; }  // f_beta
  SparseMat op_cartan(int i) const;                                         // h_i

  long long weyl_dim() const;

  nlohmann::json to_json() const;

 private:
  const RootSystem* rs_;
  const NilpotentAlgebra* alg_;
  Weight eta_;
  long dim_ = 0;
  std::vector<Weight> weights_;          // distinct, deterministic order
  std::vector<int> weight_dims_;
  std::vector<int> weight_offset_;       // first basis index per weight
  std::vector<int> basis_weight_idx_;    // weight index per basis vector
  std::vector<SparseMat> e_ops_, f_ops_;

  void certify() const;
};

HighestWeightModule build_irreducible(const NilpotentAlgebra& alg, const Weight& eta);

// weight -> multiplicity, total mass dim V
GradedDims character(const HighestWeightModule& v);

// weights in a linear extension of the dominance order (lowest first) with
// multiplicities; certified against the raising operators
std::vector<std::pair<Weight, int>> bmodule_filtration(const HighestWeightModule& v);

}  // namespace nilcoh

#endif
