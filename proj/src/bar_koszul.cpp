#include "nilcoh/bar_koszul.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace nilcoh {

namespace {

GradingVector mask_weight(const RootSystem& rs, uint32_t mask) {
  GradingVector w{std::vector<int>(rs.rank(), 0)};
  for (int r = 0; r < rs.num_positive(); ++r)
    if (mask & (1u << r)) w = w + rs.root(r);
  return w;
}

// (-1)^{sum of (deg-1) over factors left of i}
int koszul_prefactor(const std::vector<uint32_t>& f, size_t i) {
  int s = 0;
  for (size_t l = 0; l < i; ++l) s += std::popcount(f[l]) - 1;
  return s % 2 == 0 ? 1 : -1;
}

}  // namespace

BarKoszulComplex::BarKoszulComplex(const NilpotentAlgebra& alg, const GradingVector& lambda)
    : alg_(&alg), lambda_(lambda) {
  const RootSystem& rs = alg.roots();
  if (!lambda.nonneg() || lambda.is_zero())
    throw std::invalid_argument("build_bar_koszul: lambda must be nonzero in the positive cone");

  // usable factors: nonempty subsets with weight below lambda
  std::vector<std::pair<uint32_t, GradingVector>> pieces;
  for (uint32_t mask = 1; mask < (1u << alg.dim()); ++mask) {
    GradingVector w = mask_weight(rs, mask);
    if ((lambda - w).nonneg()) pieces.emplace_back(mask, w);
  }

  std::vector<Elem> all;
  std::vector<uint32_t> cur;
  // sequences of factors with total weight lambda; the columns run over
  // ordered compositions (the star products are not symmetrized), unlike the
  // unordered multisets behind kostant_partition
  auto rec = [&](auto&& self, const GradingVector& rem) -> void {
    if (rem.is_zero()) {
      if (!cur.empty()) all.push_back({cur});
      return;
    }
    for (const auto& [mask, w] : pieces) {
      GradingVector next = rem - w;
      if (!next.nonneg()) continue;
      cur.push_back(mask);
      self(self, next);
      cur.pop_back();
    }
  };
  rec(rec, lambda);

  int tmax = 0;
  auto degree_of = [](const Elem& e) {
    int d = 0;
    for (uint32_t m : e.factors) d += std::popcount(m) - 1;
    return d;
  };
  for (const auto& e : all) tmax = std::max(tmax, degree_of(e));
  terms_.resize(tmax + 1);
  for (auto& e : all) terms_[degree_of(e)].push_back(std::move(e));
  std::map<std::vector<uint32_t>, int> pos;
  for (auto& tt : terms_) {
    std::sort(tt.begin(), tt.end(),
              [](const Elem& a, const Elem& b) { return a.factors < b.factors; });
  }
  for (int t = 0; t <= tmax; ++t)
    for (size_t i = 0; i < terms_[t].size(); ++i) pos[terms_[t][i].factors] = static_cast<int>(i);

  vert_.assign(tmax + 1, SparseMat());
  hor_.assign(tmax + 1, SparseMat());
  for (int t = 0; t <= tmax; ++t) {
    int lo = t > 0 ? static_cast<int>(terms_[t - 1].size()) : 0;
    SparseMat dv(lo, static_cast<int>(terms_[t].size()));
    SparseMat dh(lo, static_cast<int>(terms_[t].size()));
    if (t == 0) {
      vert_[t] = std::move(dv);
      hor_[t] = std::move(dh);
      continue;
    }
    for (size_t col = 0; col < terms_[t].size(); ++col) {
      const auto& f = terms_[t][col].factors;
      for (size_t i = 0; i < f.size(); ++i) {
        int pre = koszul_prefactor(f, i);
        std::vector<int> elems;
        for (int r = 0; r < alg.dim(); ++r)
          if (f[i] & (1u << r)) elems.push_back(r);

        // Chevalley boundary on factor i
        for (size_t a = 0; a < elems.size(); ++a)
          for (size_t b = a + 1; b < elems.size(); ++b) {
            int m = alg.sum_index(elems[a], elems[b]);
            if (m < 0 || alg.n_const(elems[a], elems[b]) == 0) continue;
            uint32_t rest = f[i] & ~(1u << elems[a]) & ~(1u << elems[b]);
            if (rest & (1u << m)) continue;
            // cobar convention: minus the (-1)^{a+b} boundary, then sort the
            // merged root into place
            int sign = ((a + b) % 2 == 0) ? -1 : 1;
            if (std::popcount(rest & ((1u << m) - 1)) % 2 == 1) sign = -sign;
            std::vector<uint32_t> g = f;
            g[i] = rest | (1u << m);
            auto it = pos.find(g);
            if (it == pos.end()) throw std::logic_error("bar-Koszul: missing vertical target");
            dv.add(it->second, static_cast<int>(col),
                   Rat(static_cast<long>(pre * sign) * alg.n_const(elems[a], elems[b])));
          }

        // comultiplication split of factor i
        uint32_t s = f[i];
        for (uint32_t tpart = (s - 1) & s; tpart != 0; tpart = (tpart - 1) & s) {
          uint32_t u = s & ~tpart;
          if (u == 0) continue;
          int inv = 0;
          for (int x = 0; x < alg.dim(); ++x)
            if (tpart & (1u << x)) inv += std::popcount(u & ((1u << x) - 1));
          // unshuffle sign, then the desuspension sign (-1)^{|T|} of the
          // cobar splitting
          int sign = (inv % 2 == 0) ? 1 : -1;
          if (std::popcount(tpart) % 2 == 1) sign = -sign;
          std::vector<uint32_t> g;
          g.reserve(f.size() + 1);
          for (size_t l = 0; l < i; ++l) g.push_back(f[l]);
          g.push_back(tpart);
          g.push_back(u);
          for (size_t l = i + 1; l < f.size(); ++l) g.push_back(f[l]);
          auto it = pos.find(g);
          if (it == pos.end()) throw std::logic_error("bar-Koszul: missing horizontal target");
          dh.add(it->second, static_cast<int>(col), Rat(pre * sign));
        }
      }
    }
    vert_[t] = std::move(dv);
    hor_[t] = std::move(dh);
  }

  for (int t = 2; t <= tmax; ++t) {
    if (!(vert_[t - 1] * vert_[t]).is_zero()) throw std::logic_error("bar-Koszul: d_vert^2 != 0");
    if (!(hor_[t - 1] * hor_[t]).is_zero()) throw std::logic_error("bar-Koszul: d_hor^2 != 0");
    if (!(vert_[t - 1] * hor_[t] + hor_[t - 1] * vert_[t]).is_zero())
      throw std::logic_error("bar-Koszul: differentials do not anticommute");
  }
}

long BarKoszulComplex::term_dim(int t) const {
  if (t < 0 || t > max_degree()) return 0;
  return static_cast<long>(terms_[t].size());
}

std::vector<long> BarKoszulComplex::column_dims() const {
  std::vector<long> out;
  for (const auto& tt : terms_)
    for (const auto& e : tt) {
      size_t m = e.factors.size();
      if (out.size() < m) out.resize(m, 0);
      ++out[m - 1];
    }
  return out;
}

BarKoszulComplex build_bar_koszul(const NilpotentAlgebra& alg, const GradingVector& lambda) {
  return BarKoszulComplex(alg, lambda);
}

namespace {

// PBW straightening in U(n): monomials are exponent vectors over the
// positive roots, factors in decreasing canonical order.
struct EnvStraightener {
  const NilpotentAlgebra& alg;
  using Mono = std::vector<int>;
  using LinComb = std::map<Mono, Rat>;
  std::map<std::pair<int, Mono>, LinComb> memo;

  static int leading(const Mono& m) {
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
      if (m[i] > 0) return i;
    return -1;
  }

  const LinComb& mul_left(int g, const Mono& m) {
    auto key = std::make_pair(g, m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    LinComb res;
    int lead = leading(m);
    if (lead < 0 || g >= lead) {
      Mono out = m;
      ++out[g];
      res.emplace(out, Rat(1));
    } else {
      Mono rest = m;
      --rest[lead];
      for (const auto& [u, c] : mul_left(g, rest))
        for (const auto& [w, cc] : mul_left(lead, u)) {
          auto jt = res.find(w);
          if (jt == res.end())
            res.emplace(w, c * cc);
          else {
            jt->second += c * cc;
            if (jt->second == 0) res.erase(jt);
          }
        }
      int si = alg.sum_index(g, lead);
      if (si >= 0)
        for (const auto& [w, cc] : mul_left(si, rest)) {
          Rat v = cc * alg.n_const(g, lead);
          auto jt = res.find(w);
          if (jt == res.end())
            res.emplace(w, v);
          else {
            jt->second += v;
            if (jt->second == 0) res.erase(jt);
          }
        }
    }
    return memo.emplace(std::move(key), std::move(res)).first->second;
  }
};

void pbw_monos(const RootSystem& rs, const GradingVector& rem, int from, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (rem.is_zero()) {
    out.push_back(cur);
    return;
  }
  if (from >= rs.num_positive() || !rem.nonneg()) return;
  GradingVector r = rem;
  int e = 0;
  while (true) {
    cur[from] = e;
    pbw_monos(rs, r, from + 1, cur, out);
    r = r - rs.root(from);
    if (!r.nonneg()) break;
    ++e;
  }
  cur[from] = 0;
}

}  // namespace

FiberReport fiber_quasi_iso_check(const NilpotentAlgebra& alg, const GradingVector& lambda) {
  const RootSystem& rs = alg.roots();
  BarKoszulComplex cx(alg, lambda);
  FiberReport rep;
  rep.lambda = lambda;
  rep.column_dims = cx.column_dims();
  rep.expected_dim = kostant_partition(rs, lambda);

  int tmax = cx.max_degree();
  std::vector<SparseMat> mats;
  for (int t = 1; t <= tmax; ++t) mats.push_back(cx.total(t));
  std::vector<long> ranks = block_ranks_serial(mats);
  auto rank_at = [&](int t) { return (t >= 1 && t <= tmax) ? ranks[t - 1] : 0; };

  long nonzero = 0;
  for (int t = 0; t <= tmax; ++t) {
    long h = cx.term_dim(t) - rank_at(t) - rank_at(t + 1);
    if (h != 0) {
      rep.homology.emplace_back(t, h);
      ++nonzero;
      rep.degree = t;
    }
  }
  rep.concentrated = nonzero == 1 && rep.degree == 0 &&
                     rep.homology.front().second == rep.expected_dim;

  // augmentation: degree-0 elements are tuples of single root vectors; their
  // product in U(n) must hit every PBW monomial of weight lambda and kill the
  // image of the total differential
  std::vector<std::vector<int>> monos;
  std::vector<int> cur(rs.num_positive(), 0);
  pbw_monos(rs, lambda, 0, cur, monos);
  std::sort(monos.begin(), monos.end());
  EnvStraightener env{alg, {}};

  SparseMat aug(static_cast<int>(monos.size()), static_cast<int>(cx.term_dim(0)));
  for (long col = 0; col < cx.term_dim(0); ++col) {
    const auto& f = cx.term(0)[col].factors;
    EnvStraightener::LinComb acc{{std::vector<int>(rs.num_positive(), 0), Rat(1)}};
    for (size_t i = f.size(); i-- > 0;) {
      int r = std::countr_zero(f[i]);
      EnvStraightener::LinComb next;
      for (const auto& [m, c] : acc)
        for (const auto& [w, cc] : env.mul_left(r, m)) next[w] += c * cc;
      acc = std::move(next);
    }
    for (const auto& [m, c] : acc) {
      if (c == 0) continue;
      auto it = std::lower_bound(monos.begin(), monos.end(), m);
      if (it == monos.end() || *it != m) throw std::logic_error("augmentation left the weight space");
      aug.add(static_cast<int>(it - monos.begin()), static_cast<int>(col), c);
    }
  }
  rep.augmentation_onto = rank_fraction_free(aug) == static_cast<long>(monos.size());
  rep.augmentation_chain_map = tmax < 1 || (aug * cx.total(1)).is_zero();

  rep.pass = rep.concentrated && rep.augmentation_onto && rep.augmentation_chain_map;
  return rep;
}

long long subset_euler(const RootSystem& rs, const GradingVector& lambda) {
  // include/exclude over the positive roots
  std::map<std::pair<int, std::vector<int>>, long long> memo;
  auto rec = [&](auto&& self, int from, const GradingVector& rem) -> long long {
    if (rem.is_zero() && from == rs.num_positive()) return 1;
    if (from >= rs.num_positive()) return 0;
    if (!rem.nonneg()) return 0;
    auto key = std::make_pair(from, rem.c);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long v = self(self, from + 1, rem) - self(self, from + 1, rem - rs.root(from));
    memo[key] = v;
    return v;
  };
  long long signed_count = rec(rec, 0, lambda);
  return signed_count;
}

InversionReport character_inversion(const RootSystem& rs, int bound) {
  if (bound < 0) throw std::invalid_argument("character_inversion: bound must be >= 0");
  InversionReport rep;
  for (const auto& l : positive_cone(rs.rank(), bound)) {
    long long s = 0;
    // both summands run over the sub-cone below l
    long total = 1;
    for (int i = 0; i < rs.rank(); ++i) total *= l.c[i] + 1;
    for (long t = 0; t < total; ++t) {
      long x = t;
      GradingVector l1{std::vector<int>(rs.rank(), 0)};
      for (int i = 0; i < rs.rank(); ++i) {
        l1.c[i] = static_cast<int>(x % (l.c[i] + 1));
        x /= l.c[i] + 1;
      }
      GradingVector l2 = l - l1;
      long long eps = subset_euler(rs, l2);
      if (eps == 0) continue;
      s += kostant_partition(rs, l1) * eps;
    }
    bool ok = s == (l.is_zero() ? 1 : 0);
    if (!ok) rep.pass = false;
    rep.rows.push_back({l, s, ok});
  }
  return rep;
}

}  // namespace nilcoh
