#include "nilcoh/chevalley.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilcoh {

namespace {

std::string root_str(const RootSystem& rs, int idx) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rs.rank(); ++i) os << (i ? "," : "") << rs.root(idx).c[i];
  os << ")";
  return os.str();
}

}  // namespace

int NilpotentAlgebra::string_down(int b, int a) const {
  int p = 0;
  std::vector<int> cur = rs_->root(b).c;
  while (true) {
    for (int i = 0; i < rs_->rank(); ++i) cur[i] -= rs_->root(a).c[i];
    if (!rs_->is_root(cur)) break;
    ++p;
  }
  return p;
}

NilpotentAlgebra::NilpotentAlgebra(const RootSystem& rs) : rs_(&rs) {
  int n = rs.num_positive();
  n_.assign(n, std::vector<long>(n, 0));
  sum_.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) sum_[a][b] = rs.root_index(rs.root(a) + rs.root(b));

  // process targets by increasing height; special pairs (a,b) with a < b in
  // the canonical order, the extraspecial one has minimal a
  for (int g = 0; g < n; ++g) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (sum_[a][b] == g) pairs.emplace_back(a, b);
    if (pairs.empty()) continue;

    auto [eps, del] = pairs.front();
    long val = string_down(del, eps) + 1;
    n_[eps][del] = val;
    n_[del][eps] = -val;

    for (size_t k = 1; k < pairs.size(); ++k) {
      auto [a, b] = pairs[k];
      // bracket f_eps against [e_a, e_b] = N e_g and solve for N
      Rat num = 0;
      GradingVector da = rs.root(a) - rs.root(eps);
      if (da.nonneg() && rs.root_index(da) >= 0) {
        int t = rs.root_index(da);
        num += signed_const(eps, true, a, false) * Rat(n_[t][b]);
      }
      GradingVector db = rs.root(b) - rs.root(eps);
      if (db.nonneg() && rs.root_index(db) >= 0) {
        int t = rs.root_index(db);
        num += signed_const(eps, true, b, false) * Rat(n_[a][t]);
      }
      Rat den = signed_const(eps, true, g, false);
      Rat q = num / den;
      if (q.get_den() != 1)
        throw std::logic_error("Chevalley constants: non-integral constant for pair " +
                               root_str(rs, a) + " + " + root_str(rs, b));
      long v = static_cast<long>(to_ll(q.get_num()));
      long expect = string_down(b, a) + 1;
      if (std::abs(v) != expect)
        throw std::logic_error("Chevalley constants: |N| != p+1 for pair " + root_str(rs, a) +
                               " + " + root_str(rs, b));
      n_[a][b] = v;
      n_[b][a] = -v;
    }
  }

  jacobi_gate();
}

Rat NilpotentAlgebra::signed_const(int ax, bool aneg, int ay, bool bneg) const {
  if (!aneg && !bneg) return Rat(n_[ax][ay]);
  if (aneg && bneg) return Rat(-n_[ax][ay]);
  // mixed pair: rotate the zero-sum triple (x, y, u), u = -x-y, onto the
  // same-signed pair and rescale by the norm ratio
  const GradingVector& ra = rs_->root(ax);
  const GradingVector& rb = rs_->root(ay);
  std::vector<int> uc(rs_->rank());
  for (int i = 0; i < rs_->rank(); ++i)
    uc[i] = -((aneg ? -ra.c[i] : ra.c[i]) + (bneg ? -rb.c[i] : rb.c[i]));
  GradingVector upos((uc));
  bool uneg = false;
  if (!upos.nonneg() || rs_->root_index(upos) < 0) {
    for (auto& v : upos.c) v = -v;
    uneg = true;
  }
  int ui = rs_->root_index(upos);
  if (ui < 0) return Rat(0);
  Rat nu = rs_->root_norm2(rs_->root(ui));
  if (uneg == bneg) {
    // N(x,y) = (u,u)/(x,x) N(y,u)
    return nu / rs_->root_norm2(rs_->root(ax)) * signed_const(ay, bneg, ui, uneg);
  }
  // N(x,y) = (u,u)/(y,y) N(u,x)
  return nu / rs_->root_norm2(rs_->root(ay)) * signed_const(ui, uneg, ax, aneg);
}

void NilpotentAlgebra::jacobi_gate() const {
  int n = dim();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        long j = 0;
        if (sum_[a][b] >= 0 && sum_[sum_[a][b]][c] >= 0) j += n_[a][b] * n_[sum_[a][b]][c];
        if (sum_[b][c] >= 0 && sum_[sum_[b][c]][a] >= 0) j += n_[b][c] * n_[sum_[b][c]][a];
        if (sum_[c][a] >= 0 && sum_[sum_[c][a]][b] >= 0) j += n_[c][a] * n_[sum_[c][a]][b];
        if (j != 0)
          throw std::logic_error("Chevalley constants: Jacobi identity fails on triple " +
                                 root_str(*rs_, a) + ", " + root_str(*rs_, b) + ", " +
                                 root_str(*rs_, c));
      }
}

long NilpotentAlgebra::max_abs_n() const {
  long m = 0;
  for (const auto& row : n_)
    for (long v : row) m = std::max(m, std::abs(v));
  return m;
}

NilpotentAlgebra chevalley_constants(const RootSystem& rs) { return NilpotentAlgebra(rs); }

namespace {

long long ext_count(const NilpotentAlgebra& alg, int k, const GradingVector& lambda, int from) {
  if (k == 0) return lambda.is_zero() ? 1 : 0;
  if (!lambda.nonneg()) return 0;
  long long total = 0;
  for (int r = from; r <= alg.dim() - k; ++r)
    total += ext_count(alg, k - 1, lambda - alg.roots().root(r), r + 1);
  return total;
}

}  // namespace

long long exterior_power_dims(const NilpotentAlgebra& alg, int k, const GradingVector& lambda) {
  if (k < 0) throw std::invalid_argument("exterior_power_dims: negative degree");
  return ext_count(alg, k, lambda, 0);
}

long long exterior_euler(const NilpotentAlgebra& alg, const GradingVector& lambda) {
  long long e = 0;
  for (int k = 0; k <= alg.dim(); ++k) {
    long long d = exterior_power_dims(alg, k, lambda);
    e += (k % 2 == 0) ? d : -d;
  }
  return e;
}

}  // namespace nilcoh
