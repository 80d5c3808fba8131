#include "nilcoh/ce.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nilcoh {

namespace {

std::string pair_str(const RootSystem& rs, int a, int b) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rs.rank(); ++i) os << (i ? "," : "") << rs.root(a).c[i];
  os << ") , (";
  for (int i = 0; i < rs.rank(); ++i) os << (i ? "," : "") << rs.root(b).c[i];
  os << ")";
  return os.str();
}

}  // namespace

ChainComplex::ChainComplex(const NilpotentAlgebra& alg, const HighestWeightModule* coeffs)
    : alg_(&alg), coeffs_(coeffs) {
  const RootSystem& rs = alg.roots();
  int n = alg.dim();
  if (n > 20)
    throw std::invalid_argument("ce_complex: " + std::to_string(n) +
                                " positive roots is beyond the desk-scale subset enumeration");
  long vdim = coeffs ? coeffs->dim() : 1;

  // the action of every positive root vector must be bracket-compatible
  if (coeffs) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        SparseMat comm = coeffs->op_pos(a) * coeffs->op_pos(b) +
                         (coeffs->op_pos(b) * coeffs->op_pos(a)).scaled(-1);
        int s = alg.sum_index(a, b);
        SparseMat expect = s >= 0 ? coeffs->op_pos(s).scaled(alg.n_const(a, b))
                                  : SparseMat(comm.rows(), comm.cols());
        if (!(comm == expect))
          throw std::logic_error("ce_complex: action incompatible with bracket on pair " +
                                 pair_str(rs, a, b));
      }
  }

  basis_.resize(n + 1);
  std::vector<std::vector<int>> pos_of(n + 1);  // mask*vdim + vec -> index
  for (int k = 0; k <= n; ++k) pos_of[k].assign((1u << n) * vdim, -1);
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    int k = std::popcount(mask);
    Weight wsub = Weight::zero(rs.rank());
    for (int r = 0; r < n; ++r)
      if (mask & (1u << r)) wsub = wsub + Weight::of(rs.root(r));
    for (int v = 0; v < vdim; ++v) {
      Weight wt = (coeffs ? coeffs->basis_weight(v) : Weight::zero(rs.rank())) - wsub;
      pos_of[k][mask * vdim + v] = static_cast<int>(basis_[k].size());
      basis_[k].push_back({mask, v, wt});
    }
  }

  // d(e_S* (x) v) evaluated against the (k+1)-tuples indexed by T
  d_.assign(n + 1, SparseMat());
  for (int k = 0; k < n; ++k) {
    SparseMat d(static_cast<int>(basis_[k + 1].size()), static_cast<int>(basis_[k].size()));
    for (uint32_t tmask = 0; tmask < (1u << n); ++tmask) {
      if (std::popcount(tmask) != k + 1) continue;
      std::vector<int> t;
      for (int r = 0; r < n; ++r)
        if (tmask & (1u << r)) t.push_back(r);

      // action term: sum_i (-1)^i e_{t_i} . omega(rest)
      for (size_t i = 0; i < t.size(); ++i) {
        uint32_t smask = tmask & ~(1u << t[i]);
        int sign = (i % 2 == 0) ? 1 : -1;
        if (coeffs) {
          const SparseMat& op = coeffs->op_pos(t[i]);
          for (int r = 0; r < op.rows(); ++r)
            for (const auto& [c, val] : op.row(r)) {
              int row = pos_of[k + 1][tmask * vdim + r];
              int col = pos_of[k][smask * vdim + c];
              d.add(row, col, val * sign);
            }
        }
      }

      // bracket term: sum_{i<j} (-1)^{i+j} omega([t_i,t_j], rest)
      for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j) {
          int m = alg.sum_index(t[i], t[j]);
          if (m < 0 || alg.n_const(t[i], t[j]) == 0) continue;
          uint32_t rest = tmask & ~(1u << t[i]) & ~(1u << t[j]);
          if (rest & (1u << m)) continue;  // repeated argument
          uint32_t smask = rest | (1u << m);
          int sign = ((i + j) % 2 == 0) ? 1 : -1;
          // sort the merged root into place in front of `rest`
          int below = std::popcount(rest & ((1u << m) - 1));
          if (below % 2 == 1) sign = -sign;
          long nconst = alg.n_const(t[i], t[j]);
          for (int v = 0; v < vdim; ++v) {
            int row = pos_of[k + 1][tmask * vdim + v];
            int col = pos_of[k][smask * vdim + v];
            d.add(row, col, Rat(nconst * sign));
          }
        }
    }
    d_[k] = std::move(d);
  }
  d_[n] = SparseMat(0, static_cast<int>(basis_[n].size()));

  for (int k = 0; k + 1 < n; ++k)
    if (!(d_[k + 1] * d_[k]).is_zero()) throw std::logic_error("ce_complex: d.d != 0");

  // weight blocks; every differential entry must stay inside its block
  std::map<Weight, WeightBlock> blocks;
  for (int k = 0; k <= n; ++k)
    for (size_t i = 0; i < basis_[k].size(); ++i) {
      auto& b = blocks[basis_[k][i].wt];
      if (b.idx.empty()) {
        b.wt = basis_[k][i].wt;
        b.idx.resize(n + 1);
      }
      b.idx[k].push_back(static_cast<int>(i));
    }
  for (auto& [w, b] : blocks) blocks_.push_back(std::move(b));
  for (int k = 0; k < n; ++k)
    for (int r = 0; r < d_[k].rows(); ++r)
      for (const auto& [c, val] : d_[k].row(r))
        if (!(basis_[k + 1][r].wt == basis_[k][c].wt))
          throw std::logic_error("ce_complex: differential does not preserve the weight");
}

SparseMat ChainComplex::block_differential(int block, int k) const {
  const auto& rows = blocks_[block].idx[k + 1];
  const auto& cols = blocks_[block].idx[k];
  std::map<int, int> rpos, cpos;
  for (size_t i = 0; i < rows.size(); ++i) rpos[rows[i]] = static_cast<int>(i);
  for (size_t i = 0; i < cols.size(); ++i) cpos[cols[i]] = static_cast<int>(i);
  SparseMat out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int r : rows)
    for (const auto& [c, val] : d_[k].row(r))
      if (cpos.count(c)) out.add(rpos[r], cpos[c], val);
  return out;
}

ChainComplex ce_complex(const NilpotentAlgebra& alg, const HighestWeightModule* coeffs) {
  return ChainComplex(alg, coeffs);
}

long CohomologyReport::dim_at(int k) const {
  long d = 0;
  for (const auto& r : rows)
    if (r.degree == k) d += r.dim;
  return d;
}

std::vector<std::pair<Weight, long>> CohomologyReport::weights_at(int k) const {
  std::vector<std::pair<Weight, long>> out;
  for (const auto& r : rows)
    if (r.degree == k) out.emplace_back(r.weight, r.dim);
  return out;
}

nlohmann::json CohomologyReport::to_json(const RootSystem& rs, const std::string& type_name,
                                         const std::string& eta_label) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    std::vector<std::string> fund;
    for (const Rat& x : rs.fundamental_coords(r.weight)) fund.push_back(to_string(x));
    arr.push_back({{"type", type_name},
                   {"eta", eta_label},
                   {"degree", r.degree},
                   {"weight", fund},
                   {"dim", r.dim}});
  }
  return arr;
}

std::string CohomologyReport::to_csv(const RootSystem& rs, const std::string& type_name,
                                     const std::string& eta_label) const {
  std::ostringstream os;
  os << "type,eta,degree,weight,dim\n";
  for (const auto& r : rows) {
    os << type_name << "," << eta_label << "," << r.degree << ",\"";
    auto fund = rs.fundamental_coords(r.weight);
    for (size_t i = 0; i < fund.size(); ++i) os << (i ? " " : "") << to_string(fund[i]);
    os << "\"," << r.dim << "\n";
  }
  return os.str();
}

CohomologyReport cohomology(const ChainComplex& cx, int jobs) {
  int n = cx.top_degree();
  const auto& blocks = cx.blocks();

  std::vector<SparseMat> mats;
  std::vector<std::pair<int, int>> tag;  // (block, degree)
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int k = 0; k < n; ++k) {
      if (blocks[b].idx[k].empty() && blocks[b].idx[k + 1].empty()) continue;
      mats.push_back(cx.block_differential(static_cast<int>(b), k));
      tag.emplace_back(static_cast<int>(b), k);
    }
  std::vector<long> ranks = block_ranks_parallel(mats, jobs);

  std::map<std::pair<int, int>, long> rank_of;
  for (size_t i = 0; i < mats.size(); ++i) rank_of[tag[i]] = ranks[i];

  CohomologyReport rep;
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int k = 0; k <= n; ++k) {
      long dim = static_cast<long>(blocks[b].idx[k].size());
      if (dim == 0) continue;
      auto rk = [&](int deg) {
        auto it = rank_of.find({static_cast<int>(b), deg});
        return it == rank_of.end() ? 0L : it->second;
      };
      long h = dim - (k < n ? rk(k) : 0) - (k > 0 ? rk(k - 1) : 0);
      if (h != 0) rep.rows.push_back({k, blocks[b].wt, h});
    }
  std::sort(rep.rows.begin(), rep.rows.end(), [](const auto& x, const auto& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.weight < y.weight;
  });
  return rep;
}

std::vector<Weight> kostant_oracle(const RootSystem& rs, const Weight& eta, int k) {
  std::vector<Weight> out;
  for (const auto& w : weyl_elements_by_length(rs, k)) out.push_back(dot_action(w, eta, rs));
  std::sort(out.begin(), out.end());
  return out;
}

KostantReport verify_kostant(const NilpotentAlgebra& alg, const Weight& eta, int jobs) {
  const RootSystem& rs = alg.roots();
  KostantReport rep;
  HighestWeightModule v(alg, eta);
  ChainComplex cx(alg, &v);
  rep.cohom = cohomology(cx, jobs);
  rep.pass = true;
  for (int k = 0; k <= alg.dim(); ++k) {
    std::vector<Weight> got;
    for (const auto& [w, d] : rep.cohom.weights_at(k)) {
      if (d != 1) {
        rep.pass = false;
        rep.mismatches.push_back("degree " + std::to_string(k) + ": multiplicity " +
                                 std::to_string(d) + " > 1");
      }
      for (long i = 0; i < d; ++i) got.push_back(w);
    }
    std::sort(got.begin(), got.end());
    std::vector<Weight> expect = kostant_oracle(rs, eta, k);
    if (!(got == expect)) {
      rep.pass = false;
      rep.mismatches.push_back("degree " + std::to_string(k) + ": weight multiset mismatch");
    }
  }
  return rep;
}

CobracketReport cobracket_kernel(const NilpotentAlgebra& alg) {
  ChainComplex cx(alg, nullptr);
  CobracketReport rep;
  DenseMat d1 = DenseMat::from_sparse(cx.differential(1));
  DenseMat ker = kernel_basis(d1);
  rep.kernel_dim = ker.cols();
  rep.equals_simple_duals = rep.kernel_dim == alg.roots().rank();
  // term(1) basis elements are in mask order: bit r <-> dual of root r
  for (int c = 0; c < ker.cols(); ++c) {
    std::vector<Rat> vec(alg.dim(), Rat(0));
    for (int r = 0; r < ker.rows(); ++r) {
      uint32_t mask = cx.term(1)[r].mask;
      int root = std::countr_zero(mask);
      vec[root] = ker.at(r, c);
      if (ker.at(r, c) != 0 && root >= alg.roots().rank()) rep.equals_simple_duals = false;
    }
    rep.basis.push_back(std::move(vec));
  }
  return rep;
}

H2Report h2_weight_lemma(const NilpotentAlgebra& alg) {
  const RootSystem& rs = alg.roots();
  ChainComplex cx(alg, nullptr);
  CohomologyReport rep = cohomology(cx, 1);
  H2Report out;
  out.pass = true;
  for (const auto& [wt, dim] : rep.weights_at(2)) {
    // the stated form is -a_i - s_i(a_j) with s_i(a_j) = a_j - <a_j, a_i-check> a_i
    bool shape = false;
    for (int i = 0; i < rs.rank() && !shape; ++i)
      for (int j = 0; j < rs.rank() && !shape; ++j) {
        Weight si_aj = rs.simple_root(j) -
                       rs.simple_root(i).scaled(rs.pair_coroot(rs.simple_root(j), rs.root(i)));
        if (-(rs.simple_root(i) + si_aj) == wt) shape = true;
      }
    std::vector<int> coords(rs.rank());
    bool integral = true;
    for (int i = 0; i < rs.rank(); ++i) {
      if (wt.c[i].get_den() != 1) integral = false;
      else coords[i] = static_cast<int>(to_ll(wt.c[i].get_num()));
    }
    bool not_root = !integral || !rs.is_root(coords);
    for (long m = 0; m < dim; ++m) out.weights.emplace_back(wt, shape, not_root);
    if (!shape || !not_root) out.pass = false;
  }
  return out;
}

}  // namespace nilcoh
