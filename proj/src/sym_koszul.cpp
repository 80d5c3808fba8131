#include "nilcoh/sym_koszul.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nilcoh {

GradingVector GradedSpace::grade_of_mono(const std::vector<int>& exps) const {
  GradingVector g{std::vector<int>(lattice_rank, 0)};
  for (size_t i = 0; i < exps.size(); ++i)
    for (int k = 0; k < lattice_rank; ++k) g.c[k] += exps[i] * gens[i].c[k];
  return g;
}

GradedSpace GradedSpace::uniform(int dim, int lattice_rank) {
  GradedSpace w;
  w.lattice_rank = lattice_rank;
  std::vector<int> one(lattice_rank, 0);
  one[0] = 1;
  w.gens.assign(dim, GradingVector(one));
  return w;
}

SymPoly SymPoly::var(int i, int dim) {
  SymPoly p;
  std::vector<int> e(dim, 0);
  e[i] = 1;
  p.terms[e] = 1;
  return p;
}

SymPoly SymPoly::constant(const Rat& c, int dim) {
  SymPoly p;
  if (c != 0) p.terms[std::vector<int>(dim, 0)] = c;
  return p;
}

void GradedModule::validate() const {
  for (const auto& g : W.gens)
    if (!g.nonneg() || g.is_zero())
      throw std::invalid_argument("graded space: generator grades must be nonzero in the cone");
  for (size_t t = 0; t < relations.size(); ++t) {
    bool have = false;
    GradingVector grade;
    for (size_t j = 0; j < relations[t].size(); ++j)
      for (const auto& [mono, c] : relations[t][j].terms) {
        GradingVector g = W.grade_of_mono(mono) + gen_grades[j];
        if (!have) {
          grade = g;
          have = true;
        } else if (!(g == grade)) {
          throw std::invalid_argument("graded module: relation " + std::to_string(t) +
                                      " is not homogeneous");
        }
      }
  }
}

GradedModule GradedModule::free_rank_one(const GradedSpace& W) {
  GradedModule m;
  m.W = W;
  m.gen_grades = {GradingVector(std::vector<int>(W.lattice_rank, 0))};
  return m;
}

GradedModule GradedModule::augmentation(const GradedSpace& W) {
  GradedModule m = free_rank_one(W);
  for (int i = 0; i < W.dim(); ++i) m.relations.push_back({SymPoly::var(i, W.dim())});
  return m;
}

GradedModule GradedModule::quotient_by_one(const GradedSpace& W, const SymPoly& w) {
  GradedModule m = free_rank_one(W);
  if (!w.is_zero()) m.relations.push_back({w});
  return m;
}

namespace {

using Mono = std::vector<int>;

void monos_of_grade(const GradedSpace& W, const GradingVector& grade, int from, Mono& cur,
                    std::vector<Mono>& out) {
  if (grade.is_zero()) {
    Mono m = cur;
    for (int j = from; j < W.dim(); ++j) m[j] = 0;
    out.push_back(m);
    return;
  }
  if (from >= W.dim() || !grade.nonneg()) return;
  GradingVector rem = grade;
  int e = 0;
  while (true) {
    cur[from] = e;
    monos_of_grade(W, rem, from + 1, cur, out);
    rem = rem - W.gens[from];
    if (!rem.nonneg()) break;
    ++e;
  }
  cur[from] = 0;
}

struct Piece {
  std::vector<std::pair<Mono, int>> fbasis;  // (monomial, module generator)
  std::map<std::pair<Mono, int>, int> index;
  std::vector<int> free_idx;   // quotient basis, indices into fbasis
  std::vector<int> pivots;     // dependent indices
  DenseMat rel_rref;           // rref of the relation subspace, rows match pivots
  int dim() const { return static_cast<int>(free_idx.size()); }
};

struct ModulePieces {
  const GradedModule& M;
  std::map<GradingVector, Piece> pieces;

  explicit ModulePieces(const GradedModule& m, int bound) : M(m) {
    M.validate();
    for (const auto& d : positive_cone(M.W.lattice_rank, bound)) build(d);
  }

  void build(const GradingVector& d) {
    Piece p;
    for (size_t j = 0; j < M.gen_grades.size(); ++j) {
      GradingVector rem = d - M.gen_grades[j];
      if (!rem.nonneg()) continue;
      Mono cur(M.W.dim(), 0);
      std::vector<Mono> ms;
      monos_of_grade(M.W, rem, 0, cur, ms);
      for (auto& m : ms) p.fbasis.emplace_back(std::move(m), static_cast<int>(j));
    }
    std::sort(p.fbasis.begin(), p.fbasis.end());
    for (size_t i = 0; i < p.fbasis.size(); ++i) p.index[p.fbasis[i]] = static_cast<int>(i);

    // relation multiples landing in grade d
    std::vector<std::vector<Rat>> rows;
    for (size_t t = 0; t < M.relations.size(); ++t) {
      GradingVector rg;
      bool have = false;
      for (size_t j = 0; j < M.relations[t].size(); ++j)
        for (const auto& [mono, c] : M.relations[t][j].terms) {
          rg = M.W.grade_of_mono(mono) + M.gen_grades[j];
          have = true;
          break;
        }
      if (!have) continue;
      GradingVector urem = d - rg;
      if (!urem.nonneg()) continue;
      Mono cur(M.W.dim(), 0);
      std::vector<Mono> us;
      monos_of_grade(M.W, urem, 0, cur, us);
      for (const auto& u : us) {
        std::vector<Rat> row(p.fbasis.size(), Rat(0));
        for (size_t j = 0; j < M.relations[t].size(); ++j)
          for (const auto& [mono, c] : M.relations[t][j].terms) {
            Mono prod = u;
            for (size_t x = 0; x < prod.size(); ++x) prod[x] += mono[x];
            row[p.index.at({prod, static_cast<int>(j)})] += c;
          }
        rows.push_back(std::move(row));
      }
    }

    DenseMat rel(static_cast<int>(rows.size()), static_cast<int>(p.fbasis.size()));
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < rows[r].size(); ++c) rel.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    p.pivots = rref(rel);
    p.rel_rref = rel;
    std::vector<bool> is_pivot(p.fbasis.size(), false);
    for (int v : p.pivots) is_pivot[v] = true;
    for (size_t i = 0; i < p.fbasis.size(); ++i)
      if (!is_pivot[i]) p.free_idx.push_back(static_cast<int>(i));
    pieces[d] = std::move(p);
  }

  // reduce a vector given in F-basis coordinates to quotient coordinates
  std::vector<Rat> reduce(const GradingVector& d, const std::vector<Rat>& v) const {
    const Piece& p = pieces.at(d);
    std::vector<Rat> out(p.free_idx.size(), Rat(0));
    for (size_t k = 0; k < p.free_idx.size(); ++k) out[k] = v[p.free_idx[k]];
    for (size_t r = 0; r < p.pivots.size(); ++r) {
      const Rat& coef = v[p.pivots[r]];
      if (coef == 0) continue;
      for (size_t k = 0; k < p.free_idx.size(); ++k)
        out[k] -= coef * p.rel_rref.at(static_cast<int>(r), p.free_idx[k]);
    }
    return out;
  }

  // multiply quotient basis vector `which` at grade d by the monomial `u`
  std::vector<Rat> mult_mono(const GradingVector& d, int which, const Mono& u) const {
    const Piece& src = pieces.at(d);
    auto [base, gen] = src.fbasis[src.free_idx[which]];
    Mono prod = base;
    for (size_t x = 0; x < prod.size(); ++x) prod[x] += u[x];
    GradingVector target = d + M.W.grade_of_mono(u);
    const Piece& dst = pieces.at(target);
    std::vector<Rat> f(dst.fbasis.size(), Rat(0));
    f[dst.index.at({prod, gen})] = 1;
    return reduce(target, f);
  }
};

}  // namespace

GradedDims sym_koszul_tor(const GradedModule& M, int bound) {
  if (bound < 0) throw std::invalid_argument("sym_koszul_tor: bound must be >= 0");
  ModulePieces mp(M, bound);
  int nw = M.W.dim();
  GradedDims out;
  out.bound = bound;

  for (const auto& d : positive_cone(M.W.lattice_rank, bound)) {
    // K_k at total grade d: (subset of W, module element); assemble per k
    std::vector<std::vector<std::pair<uint32_t, int>>> basis(nw + 1);
    std::vector<std::map<std::pair<uint32_t, int>, int>> pos(nw + 1);
    for (uint32_t mask = 0; mask < (1u << nw); ++mask) {
      GradingVector mg{std::vector<int>(M.W.lattice_rank, 0)};
      for (int i = 0; i < nw; ++i)
        if (mask & (1u << i)) mg = mg + M.W.gens[i];
      GradingVector rem = d - mg;
      if (!rem.nonneg()) continue;
      auto it = mp.pieces.find(rem);
      if (it == mp.pieces.end()) continue;
      int k = std::popcount(mask);
      for (int m = 0; m < it->second.dim(); ++m) {
        pos[k][{mask, m}] = static_cast<int>(basis[k].size());
        basis[k].emplace_back(mask, m);
      }
    }

    std::vector<SparseMat> diff(nw + 1);  // K_k -> K_{k-1}
    for (int k = 1; k <= nw; ++k) {
      SparseMat dmat(static_cast<int>(basis[k - 1].size()), static_cast<int>(basis[k].size()));
      for (size_t col = 0; col < basis[k].size(); ++col) {
        auto [mask, m] = basis[k][col];
        GradingVector mg{std::vector<int>(M.W.lattice_rank, 0)};
        for (int i = 0; i < nw; ++i)
          if (mask & (1u << i)) mg = mg + M.W.gens[i];
        GradingVector mod_grade = d - mg;
        int t = 0;
        for (int i = 0; i < nw; ++i) {
          if (!(mask & (1u << i))) continue;
          int sign = (t % 2 == 0) ? 1 : -1;
          ++t;
          Mono u(nw, 0);
          u[i] = 1;
          std::vector<Rat> img = mp.mult_mono(mod_grade, m, u);
          uint32_t sub = mask & ~(1u << i);
          for (size_t x = 0; x < img.size(); ++x)
            if (img[x] != 0)
              dmat.add(pos[k - 1].at({sub, static_cast<int>(x)}), static_cast<int>(col),
                       img[x] * sign);
        }
      }
      diff[k] = std::move(dmat);
    }
    for (int k = 2; k <= nw; ++k)
      if (!(diff[k - 1] * diff[k]).is_zero())
        throw std::logic_error("sym_koszul_tor: Koszul differential does not square to zero");

    std::vector<long> rk(nw + 2, 0);
    for (int k = 1; k <= nw; ++k) rk[k] = rank_fraction_free(diff[k]);
    for (int k = 0; k <= nw; ++k) {
      long h = static_cast<long>(basis[k].size()) - rk[k] - rk[k + 1];
      if (h != 0) {
        std::vector<Rat> key(d.c.size());
        for (size_t i = 0; i < d.c.size(); ++i) key[i] = d.c[i];
        out.add(key, k, h);
      }
    }
  }
  return out;
}

GradedDims tor_bar_resolution(const GradedModule& M, int bound) {
  ModulePieces mp(M, bound);
  GradedDims out;
  out.bound = bound;

  for (const auto& d : positive_cone(M.W.lattice_rank, bound)) {
    int kmax = d.height();  // every bar factor has grade height >= 1
    // basis of B_k at grade d: (list of nonconstant monomials, module element)
    using Key = std::pair<std::vector<Mono>, int>;
    std::vector<std::vector<Key>> basis(kmax + 2);
    std::vector<std::map<Key, int>> pos(kmax + 2);

    std::vector<std::pair<Mono, GradingVector>> bar_letters;
    {
      for (const auto& g : positive_cone(M.W.lattice_rank, bound)) {
        if (g.is_zero() || !(d - g).nonneg()) continue;
        Mono cur(M.W.dim(), 0);
        std::vector<Mono> ms;
        monos_of_grade(M.W, g, 0, cur, ms);
        for (auto& m : ms) bar_letters.emplace_back(std::move(m), g);
      }
    }

    std::vector<Mono> word;
    auto rec = [&](auto&& self, const GradingVector& rem) -> void {
      auto it = mp.pieces.find(rem);
      if (it != mp.pieces.end()) {
        int k = static_cast<int>(word.size());
        if (k <= kmax + 1)
          for (int m = 0; m < it->second.dim(); ++m) {
            pos[k][{word, m}] = static_cast<int>(basis[k].size());
            basis[k].emplace_back(word, m);
          }
      }
      for (const auto& [mono, g] : bar_letters) {
        GradingVector next = rem - g;
        if (!next.nonneg()) continue;
        word.push_back(mono);
        self(self, next);
        word.pop_back();
      }
    };
    rec(rec, d);

    std::vector<SparseMat> diff(kmax + 2);
    for (int k = 1; k <= kmax + 1; ++k) {
      SparseMat dmat(static_cast<int>(basis[k - 1].size()), static_cast<int>(basis[k].size()));
      for (size_t col = 0; col < basis[k].size(); ++col) {
        const auto& [word_k, m] = basis[k][col];
        GradingVector wsum{std::vector<int>(M.W.lattice_rank, 0)};
        for (const auto& a : word_k) wsum = wsum + M.W.grade_of_mono(a);
        GradingVector mod_grade = d - wsum;

        // merges inside the word
        for (int i = 0; i + 1 < k; ++i) {
          std::vector<Mono> merged;
          for (int x = 0; x < k; ++x) {
            if (x == i) {
              Mono prod = word_k[i];
              for (size_t y = 0; y < prod.size(); ++y) prod[y] += word_k[i + 1][y];
              merged.push_back(std::move(prod));
            } else if (x != i + 1) {
              merged.push_back(word_k[x]);
            }
          }
          int sign = (i % 2 == 0) ? 1 : -1;
          dmat.add(pos[k - 1].at({merged, m}), static_cast<int>(col), Rat(sign));
        }
        // last letter acts on the module element
        {
          std::vector<Mono> rest(word_k.begin(), word_k.end() - 1);
          std::vector<Rat> img = mp.mult_mono(mod_grade, m, word_k.back());
          int sign = ((k - 1) % 2 == 0) ? 1 : -1;
          for (size_t x = 0; x < img.size(); ++x)
            if (img[x] != 0)
              dmat.add(pos[k - 1].at({rest, static_cast<int>(x)}), static_cast<int>(col),
                       img[x] * sign);
        }
      }
      diff[k] = std::move(dmat);
    }
    for (int k = 2; k <= kmax + 1; ++k)
      if (!(diff[k - 1] * diff[k]).is_zero())
        throw std::logic_error("tor_bar_resolution: bar differential does not square to zero");

    for (int k = 0; k <= kmax; ++k) {
      long dim = static_cast<long>(basis[k].size());
      long rk_k = k >= 1 ? rank_fraction_free(diff[k]) : 0;
      long rk_k1 = rank_fraction_free(diff[k + 1]);
      long h = dim - rk_k - rk_k1;
      if (h != 0) {
        std::vector<Rat> key(d.c.size());
        for (size_t i = 0; i < d.c.size(); ++i) key[i] = d.c[i];
        out.add(key, k, h);
      }
    }
  }
  return out;
}

}  // namespace nilcoh
