#include "nilcoh/module.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nilcoh {

namespace {

using Mono = std::vector<int>;  // exponents over the positive roots
using LinComb = std::map<Mono, Rat>;

void add_term(LinComb& l, const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto it = l.find(m);
  if (it == l.end())
    l.emplace(m, c);
  else {
    it->second += c;
    if (it->second == 0) l.erase(it);
  }
}

void add_scaled(LinComb& dst, const LinComb& src, const Rat& c) {
  if (c == 0) return;
  for (const auto& [m, v] : src) add_term(dst, m, v * c);
}

/*
 * PBW straightening over the negative root vectors.  Monomials are exponent
 * vectors read as f_{b_N}^{a_N} ... f_{b_1}^{a_1} applied to the highest
 * vector, factors in decreasing canonical root order.
 */
struct VermaEngine {
  const NilpotentAlgebra& alg;
  const RootSystem& rs;
  Weight eta;

  std::map<std::pair<int, Mono>, LinComb> memo_e, memo_f;

  VermaEngine(const NilpotentAlgebra& a, const Weight& hw)
      : alg(a), rs(a.roots()), eta(hw) {}

  static int leading(const Mono& m) {
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
      if (m[i] > 0) return i;
    return -1;
  }

  GradingVector depth_of(const Mono& m) const {
    GradingVector d{std::vector<int>(rs.rank(), 0)};
    for (int i = 0; i < static_cast<int>(m.size()); ++i)
      if (m[i])
        for (int k = 0; k < rs.rank(); ++k) d.c[k] += m[i] * rs.root(i).c[k];
    return d;
  }

  Weight weight_of(const Mono& m) const { return eta - Weight::of(depth_of(m)); }

  // f_{b_g} . m
  const LinComb& act_f(int g, const Mono& m) {
    auto key = std::make_pair(g, m);
    auto it = memo_f.find(key);
    if (it != memo_f.end()) return it->second;

    LinComb res;
    int lead = leading(m);
    if (lead < 0 || g >= lead) {
      Mono out = m;
      ++out[g];
      res.emplace(out, Rat(1));
    } else {
      Mono rest = m;
      --rest[lead];
      for (const auto& [u, c] : act_f(g, rest)) {
        const LinComb inserted = act_f(lead, u);
        add_scaled(res, inserted, c);
      }
      int si = alg.sum_index(g, lead);
      if (si >= 0) add_scaled(res, act_f(si, rest), Rat(-alg.n_const(g, lead)));
    }
    return memo_f.emplace(std::move(key), std::move(res)).first->second;
  }

  // e_{b_s} . m
  const LinComb& act_e(int s, const Mono& m) {
    auto key = std::make_pair(s, m);
    auto it = memo_e.find(key);
    if (it != memo_e.end()) return it->second;

    LinComb res;
    int lead = leading(m);
    if (lead >= 0) {
      Mono rest = m;
      --rest[lead];
      for (const auto& [u, c] : act_e(s, rest)) {
        const LinComb inserted = act_f(lead, u);
        add_scaled(res, inserted, c);
      }
      if (s == lead) {
        add_term(res, rest, rs.pair_coroot(weight_of(rest), rs.root(lead)));
      } else {
        GradingVector diff = rs.root(s) - rs.root(lead);
        int t = diff.nonneg() ? rs.root_index(diff) : -1;
        if (t >= 0) {
          add_scaled(res, act_e(t, rest), alg.signed_const(s, false, lead, true));
        } else {
          GradingVector neg = rs.root(lead) - rs.root(s);
          int u = neg.nonneg() ? rs.root_index(neg) : -1;
          if (u >= 0) add_scaled(res, act_f(u, rest), alg.signed_const(s, false, lead, true));
        }
      }
    }
    return memo_e.emplace(std::move(key), std::move(res)).first->second;
  }

  LinComb act_e_lin(int s, const LinComb& x) {
    LinComb res;
    for (const auto& [m, c] : x) add_scaled(res, act_e(s, m), c);
    return res;
  }
};

void enumerate_monos(const RootSystem& rs, const GradingVector& depth, int from, Mono& cur,
                     std::vector<Mono>& out) {
  if (depth.is_zero()) {
    out.push_back(cur);
    return;
  }
  if (from >= rs.num_positive() || !depth.nonneg()) return;
  // exponent of root `from`, bounded by the remaining depth
  GradingVector rem = depth;
  int e = 0;
  while (true) {
    cur[from] = e;
    enumerate_monos(rs, rem, from + 1, cur, out);
    rem = rem - rs.root(from);
    if (!rem.nonneg()) break;
    ++e;
  }
  cur[from] = 0;
}

struct DepthBlock {
  GradingVector depth;
  std::vector<Mono> monos;
  std::vector<int> pivots;
  DenseMat coeff;  // |pivots| x |monos| class coordinates
  int offset = 0;  // global basis index of first pivot
};

}  // namespace

HighestWeightModule::HighestWeightModule(const NilpotentAlgebra& alg, const Weight& eta)
    : rs_(&alg.roots()), alg_(&alg), eta_(eta) {
  const RootSystem& rs = *rs_;
  if (!rs.is_dominant_integral(eta))
    throw std::invalid_argument("build_irreducible: highest weight is not dominant integral");

  Weight low = rs.longest_element().apply(eta);
  Weight boxw = eta - low;
  GradingVector box{std::vector<int>(rs.rank(), 0)};
  for (int i = 0; i < rs.rank(); ++i) {
    if (boxw.c[i].get_den() != 1) throw std::logic_error("weight box is not integral");
    box.c[i] = static_cast<int>(to_ll(boxw.c[i].get_num()));
  }

  VermaEngine eng(alg, eta);

  // depth lattice points inside the box, height-lex order
  std::vector<GradingVector> depths;
  {
    std::vector<int> cur(rs.rank(), 0);
    long total = 1;
    for (int i = 0; i < rs.rank(); ++i) total *= box.c[i] + 1;
    for (long t = 0; t < total; ++t) {
      long x = t;
      for (int i = 0; i < rs.rank(); ++i) {
        cur[i] = static_cast<int>(x % (box.c[i] + 1));
        x /= box.c[i] + 1;
      }
      depths.push_back(GradingVector(cur));
    }
    std::sort(depths.begin(), depths.end(), canonical_less);
  }

  std::map<GradingVector, DepthBlock> blocks;
  int global = 0;
  for (const auto& d : depths) {
    DepthBlock b;
    b.depth = d;
    Mono cur(rs.num_positive(), 0);
    enumerate_monos(rs, d, 0, cur, b.monos);
    if (b.monos.empty()) continue;
    std::sort(b.monos.begin(), b.monos.end());

    int p = static_cast<int>(b.monos.size());
    DenseMat gram(p, p);
    for (int i = 0; i < p; ++i) {
      // factors of monomial i, leftmost (largest root) first
      std::vector<int> factors;
      for (int r = rs.num_positive() - 1; r >= 0; --r)
        for (int k = 0; k < b.monos[i][r]; ++k) factors.push_back(r);
      for (int j = 0; j < p; ++j) {
        LinComb u{{b.monos[j], Rat(1)}};
        for (int f : factors) {
          u = eng.act_e_lin(f, u);
          if (u.empty()) break;
        }
        Mono empty(rs.num_positive(), 0);
        auto it = u.find(empty);
        gram.at(i, j) = it == u.end() ? Rat(0) : it->second;
      }
    }

    ColumnBasis cb = column_basis(gram);
    if (cb.pivots.empty()) continue;
    b.pivots = cb.pivots;
    b.coeff = cb.coeff;
    b.offset = global;
    global += static_cast<int>(b.pivots.size());

    weights_.push_back(eta - Weight::of(d));
    weight_dims_.push_back(static_cast<int>(b.pivots.size()));
    weight_offset_.push_back(b.offset);
    for (size_t k = 0; k < b.pivots.size(); ++k)
      basis_weight_idx_.push_back(static_cast<int>(weights_.size()) - 1);
    blocks.emplace(d, std::move(b));
  }
  dim_ = global;

  // reduce a Verma vector at a known depth to quotient coordinates
  auto reduce = [&](const LinComb& u, const GradingVector& d) -> std::vector<std::pair<int, Rat>> {
    std::vector<std::pair<int, Rat>> out;
    auto it = blocks.find(d);
    if (it == blocks.end()) return out;  // weight absent from the module
    const DepthBlock& b = it->second;
    std::vector<Rat> acc(b.pivots.size(), Rat(0));
    for (const auto& [m, c] : u) {
      auto pos = std::lower_bound(b.monos.begin(), b.monos.end(), m);
      if (pos == b.monos.end() || *pos != m) throw std::logic_error("monomial outside depth block");
      int col = static_cast<int>(pos - b.monos.begin());
      for (size_t k = 0; k < b.pivots.size(); ++k) acc[k] += b.coeff.at(static_cast<int>(k), col) * c;
    }
    for (size_t k = 0; k < b.pivots.size(); ++k)
      if (acc[k] != 0) out.emplace_back(b.offset + static_cast<int>(k), acc[k]);
    return out;
  };

  e_ops_.assign(rs.num_positive(), SparseMat(static_cast<int>(dim_), static_cast<int>(dim_)));
  f_ops_.assign(rs.num_positive(), SparseMat(static_cast<int>(dim_), static_cast<int>(dim_)));
  for (auto& [d, b] : blocks) {
    for (size_t k = 0; k < b.pivots.size(); ++k) {
      int col = b.offset + static_cast<int>(k);
      const Mono& m = b.monos[b.pivots[k]];
      for (int s = 0; s < rs.num_positive(); ++s) {
        GradingVector up = d - rs.root(s);
        if (up.nonneg())
          for (const auto& [row, val] : reduce(eng.act_e(s, m), up)) e_ops_[s].add(row, col, val);
        GradingVector down = d + rs.root(s);
        bool inside = true;
        for (int i = 0; i < rs.rank(); ++i) inside = inside && down.c[i] <= box.c[i];
        if (inside)
          for (const auto& [row, val] : reduce(eng.act_f(s, m), down)) f_ops_[s].add(row, col, val);
      }
    }
  }

  certify();
}

long HighestWeightModule::weight_dim(const Weight& w) const {
  for (size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] == w) return weight_dims_[i];
  return 0;
}

SparseMat HighestWeightModule::op_cartan(int i) const {
  SparseMat h(static_cast<int>(dim_), static_cast<int>(dim_));
  for (int b = 0; b < dim_; ++b)
    h.add(b, b, rs_->pair_coroot(basis_weight(b), rs_->root(i)));
  return h;
}

long long HighestWeightModule::weyl_dim() const {
  Rat prod = 1;
  for (const auto& beta : rs_->positive_roots())
    prod *= rs_->pair_coroot(eta_ + rs_->rho(), beta) / rs_->pair_coroot(rs_->rho(), beta);
  return to_ll(prod);
}

void HighestWeightModule::certify() const {
  const RootSystem& rs = *rs_;
  int n = rs.rank();
  if (dim_ != weyl_dim())
    throw std::logic_error("module certification: dimension disagrees with the Weyl formula");
  for (int i = 0; i < n; ++i) {
    SparseMat h = op_cartan(i);
    for (int j = 0; j < n; ++j) {
      SparseMat he = h * e_ops_[j] + (e_ops_[j] * h).scaled(-1);
      if (!(he == e_ops_[j].scaled(rs.cartan().a[i][j])))
        throw std::logic_error("module certification: [h,e] relation fails");
      SparseMat hf = h * f_ops_[j] + (f_ops_[j] * h).scaled(-1);
      if (!(hf == f_ops_[j].scaled(-rs.cartan().a[i][j])))
        throw std::logic_error("module certification: [h,f] relation fails");
      SparseMat ef = e_ops_[i] * f_ops_[j] + (f_ops_[j] * e_ops_[i]).scaled(-1);
      if (i == j) {
        if (!(ef == h)) throw std::logic_error("module certification: [e,f] != h");
      } else if (!ef.is_zero()) {
        throw std::logic_error("module certification: [e_i,f_j] != 0 for i != j");
      }
    }
  }
}

nlohmann::json HighestWeightModule::to_json() const {
  nlohmann::json j;
  auto fund_int = [&](const Weight& w) {
    std::vector<long long> f;
    for (const Rat& x : rs_->fundamental_coords(w)) f.push_back(to_ll(x));
    return f;
  };
  j["highest_weight"] = fund_int(eta_);
  j["dim"] = dim_;
  j["weights"] = nlohmann::json::array();
  for (size_t i = 0; i < weights_.size(); ++i)
    j["weights"].push_back({{"weight", fund_int(weights_[i])}, {"dim", weight_dims_[i]}});
  auto dump_ops = [&](const std::vector<SparseMat>& ops) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : ops) {
      nlohmann::json quads = nlohmann::json::array();
      for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r))
          quads.push_back({r, c, v.get_num().get_str(), v.get_den().get_str()});
      arr.push_back(quads);
    }
    return arr;
  };
  j["operators"]["e"] = dump_ops(e_ops_);
  j["operators"]["f"] = dump_ops(f_ops_);
  return j;
}

HighestWeightModule build_irreducible(const NilpotentAlgebra& alg, const Weight& eta) {
  return HighestWeightModule(alg, eta);
}

GradedDims character(const HighestWeightModule& v) {
  GradedDims out;
  const auto& ws = v.weights();
  for (const auto& w : ws) out.add(w.c, 0, v.weight_dim(w));
  return out;
}

std::vector<std::pair<Weight, int>> bmodule_filtration(const HighestWeightModule& v) {
  const RootSystem& rs = v.roots();
  std::vector<std::pair<Weight, int>> list;
  for (const auto& w : v.weights()) list.emplace_back(w, static_cast<int>(v.weight_dim(w)));
  // lowest weights first: deeper below the highest weight comes earlier
  std::sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
    Weight da = v.highest_weight() - a.first, db = v.highest_weight() - b.first;
    Rat ha = 0, hb = 0;
    for (const auto& x : da.c) ha += x;
    for (const auto& x : db.c) hb += x;
    if (ha != hb) return ha > hb;
    return a.first < b.first;
  });
  std::map<Weight, int> pos;
  for (size_t i = 0; i < list.size(); ++i) pos[list[i].first] = static_cast<int>(i);
  // raising operators must move strictly forward in the listed order
  for (int i = 0; i < rs.rank(); ++i) {
    const SparseMat& e = v.op_pos(i);
    for (int r = 0; r < e.rows(); ++r)
      for (const auto& [c, val] : e.row(r))
        if (pos[v.basis_weight(r)] <= pos[v.basis_weight(c)])
          throw std::logic_error("bmodule_filtration: raising operator violates the order");
  }
  return list;
}

}  // namespace nilcoh
