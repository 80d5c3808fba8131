#include "nilcoh/root_system.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace nilcoh {

namespace {

// determinant of the leading k x k principal minor, exact
Int principal_minor(const std::vector<std::vector<int>>& a, int k) {
  DenseMat m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.at(i, j) = a[i][j];
  // fraction-free would do; at rank <= 8 plain elimination is fine
  Rat det = 1;
  for (int c = 0; c < k; ++c) {
    int p = -1;
    for (int i = c; i < k; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < k; ++j) std::swap(m.at(p, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Rat inv = 1 / m.at(c, c);
    for (int i = c + 1; i < k; ++i) {
      Rat f = m.at(i, c) * inv;
      if (f == 0) continue;
      for (int j = c; j < k; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  Rat d = det;
  return d.get_num();  // integer since the input matrix is integral
}

}  // namespace

void CartanMatrix::validate() const {
  int n = rank();
  if (n == 0) throw std::invalid_argument("Cartan matrix: empty");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("Cartan matrix: not square");
  for (int i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw std::invalid_argument("Cartan matrix: diagonal entry a[" + std::to_string(i) + "][" + std::to_string(i) + "] != 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw std::invalid_argument("Cartan matrix: positive off-diagonal entry a[" + std::to_string(i) + "][" + std::to_string(j) + "]");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw std::invalid_argument("Cartan matrix: zero pattern not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  for (int k = 1; k <= n; ++k) {
    if (principal_minor(a, k) <= 0)
      throw std::invalid_argument("Cartan matrix: not of finite type, leading principal minor of order " + std::to_string(k) + " is " + principal_minor(a, k).get_str());
  }
}

CartanMatrix CartanMatrix::preset(const std::string& name) {
  if (name == "A1") return {{{2}}};
  if (name == "A2") return {{{2, -1}, {-1, 2}}};
  if (name == "A3") return {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}};
  if (name == "B2") return {{{2, -1}, {-2, 2}}};
  if (name == "C2") return {{{2, -2}, {-1, 2}}};
  if (name == "G2") return {{{2, -1}, {-3, 2}}};
  if (name == "B3") return {{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}};
  throw std::invalid_argument("unknown root-system preset '" + name + "'");
}

const std::vector<std::string>& CartanMatrix::preset_names() {
  static const std::vector<std::string> names = {"A1", "A2", "A3", "B2", "C2", "G2", "B3"};
  return names;
}

CartanMatrix CartanMatrix::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open Cartan matrix file '" + path + "'");
  nlohmann::json j;
  in >> j;
  if (j.is_object() && j.contains("cartan")) j = j["cartan"];
  if (!j.is_array()) throw std::invalid_argument("Cartan matrix file: expected an array of integer arrays");
  CartanMatrix cm;
  for (const auto& row : j) cm.a.push_back(row.get<std::vector<int>>());
  cm.validate();
  return cm;
}

int GradingVector::height() const {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

bool GradingVector::nonneg() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

bool GradingVector::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

GradingVector GradingVector::operator+(const GradingVector& o) const {
  GradingVector r = *this;
  for (int i = 0; i < rank(); ++i) r.c[i] += o.c[i];
  return r;
}

GradingVector GradingVector::operator-(const GradingVector& o) const {
  GradingVector r = *this;
  for (int i = 0; i < rank(); ++i) r.c[i] -= o.c[i];
  return r;
}

bool canonical_less(const GradingVector& x, const GradingVector& y) {
  if (x.height() != y.height()) return x.height() < y.height();
  // within a height level the earlier Dynkin node wins, so the simple roots
  // come out as a_1, ..., a_n
  return x.c > y.c;
}

Weight Weight::of(const GradingVector& g) {
  std::vector<Rat> c(g.c.size());
  for (size_t i = 0; i < g.c.size(); ++i) c[i] = g.c[i];
  return Weight(std::move(c));
}

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (int i = 0; i < rank(); ++i) r.c[i] += o.c[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (int i = 0; i < rank(); ++i) r.c[i] -= o.c[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Weight Weight::scaled(const Rat& s) const {
  Weight r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

bool Weight::operator<(const Weight& o) const {
  for (int i = 0; i < rank(); ++i) {
    int cmp = ::cmp(c[i], o.c[i]);
    if (cmp != 0) return cmp < 0;
  }
  return false;
}

Weight WeylElement::apply(const Weight& w) const {
  int n = static_cast<int>(action.size());
  Weight out = Weight::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (action[i][j] != 0) out.c[i] += Rat(action[i][j]) * w.c[j];
  return out;
}

std::vector<int> WeylElement::apply(const std::vector<int>& coords) const {
  int n = static_cast<int>(action.size());
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += action[i][j] * coords[j];
  return out;
}

namespace {

std::vector<std::vector<int>> simple_reflection_matrix(const CartanMatrix& cm, int i) {
  int n = cm.rank();
  std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
  for (int k = 0; k < n; ++k) s[k][k] = 1;
  // s_i(mu) = mu - <mu, alpha_i-check> alpha_i; row i picks up -a[i][j]
  for (int j = 0; j < n; ++j) s[i][j] -= cm.a[i][j];
  return s;
}

std::vector<std::vector<int>> mat_mul(const std::vector<std::vector<int>>& x,
                                      const std::vector<std::vector<int>>& y) {
  int n = static_cast<int>(x.size());
  std::vector<std::vector<int>> z(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    }
  return z;
}

}  // namespace

RootSystem::RootSystem(CartanMatrix cm) : cm_(std::move(cm)) {
  cm_.validate();
  int n = cm_.rank();

  // positive roots: close the simple roots under the reflections, keep the
  // nonnegative vectors, then sort by height-lex
  std::set<std::vector<int>> seen;
  std::vector<GradingVector> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(GradingVector(e));
  }
  std::vector<std::vector<std::vector<int>>> refl(n);
  for (int i = 0; i < n; ++i) refl[i] = simple_reflection_matrix(cm_, i);
  for (size_t q = 0; q < queue.size(); ++q) {
    GradingVector b = queue[q];
    for (int i = 0; i < n; ++i) {
      std::vector<int> img(n, 0);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) img[r] += refl[i][r][c] * b.c[c];
      if (std::all_of(img.begin(), img.end(), [](int x) { return x >= 0; }) && !seen.count(img)) {
        seen.insert(img);
        queue.push_back(GradingVector(img));
      }
    }
  }
  pos_ = std::move(queue);
  std::sort(pos_.begin(), pos_.end(), canonical_less);

  // symmetrizer: d_i a_ij = d_j a_ji, connected component propagation
  sym_.assign(n, Rat(0));
  for (int start = 0; start < n; ++start) {
    if (sym_[start] != 0) continue;
    sym_[start] = 1;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (cm_.a[i][j] == 0 || i == j || sym_[j] != 0) continue;
        sym_[j] = sym_[i] * Rat(cm_.a[i][j]) / Rat(cm_.a[j][i]);
        stack.push_back(j);
      }
    }
  }

  // inverse Cartan for fundamental-coordinate conversion
  DenseMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = cm_.a[i][j];
    aug.at(i, n + i) = 1;
  }
  rref(aug);
  inv_cartan_ = DenseMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv_cartan_.at(i, j) = aug.at(i, n + j);

  rho_ = from_fundamental(std::vector<Rat>(n, Rat(1)));

  // Weyl group: breadth-first closure over simple reflections, dedup by the
  // action matrix; BFS depth is the length
  std::map<std::vector<std::vector<int>>, int> known;
  std::vector<std::vector<int>> id(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  weyl_.push_back({{}, id, 0});
  known[id] = 0;
  for (size_t q = 0; q < weyl_.size(); ++q) {
    WeylElement w = weyl_[q];
    for (int i = 0; i < n; ++i) {
      auto m = mat_mul(refl[i], w.action);  // s_i * w, length grows left-to-right in the word
      if (known.count(m)) continue;
      WeylElement next;
      next.word = w.word;
      next.word.insert(next.word.begin(), i);
      next.action = m;
      next.length = w.length + 1;
      known[m] = 1;
      weyl_.push_back(std::move(next));
    }
  }
  std::stable_sort(weyl_.begin(), weyl_.end(), [](const WeylElement& x, const WeylElement& y) {
    if (x.length != y.length) return x.length < y.length;
    return x.action < y.action;
  });

  // structural cross-checks fixed by construction
  if (static_cast<int>(pos_.size()) != weyl_.back().length)
    throw std::logic_error("root system: |Delta+| != length of the longest element");
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    if (root_index(GradingVector(e)) != i)
      throw std::logic_error("root system: simple roots not leading in the canonical order");
  }
}

int RootSystem::root_index(const GradingVector& g) const {
  for (int i = 0; i < num_positive(); ++i)
    if (pos_[i] == g) return i;
  return -1;
}

bool RootSystem::is_root(const std::vector<int>& coords) const {
  std::vector<int> neg(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) neg[i] = -coords[i];
  return root_index(GradingVector(coords)) >= 0 || root_index(GradingVector(neg)) >= 0;
}

Rat RootSystem::bilinear(const Weight& x, const Weight& y) const {
  // (alpha_i, alpha_j) = d_i a_ij
  Rat s = 0;
  int n = rank();
  for (int i = 0; i < n; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (cm_.a[i][j] != 0 && y.c[j] != 0) s += x.c[i] * y.c[j] * sym_[i] * Rat(cm_.a[i][j]);
  }
  return s;
}

Rat RootSystem::root_norm2(const GradingVector& g) const {
  Weight w = Weight::of(g);
  return bilinear(w, w);
}

Rat RootSystem::pair_coroot(const Weight& mu, const GradingVector& beta) const {
  Weight b = Weight::of(beta);
  return 2 * bilinear(mu, b) / bilinear(b, b);
}

std::vector<Rat> RootSystem::fundamental_coords(const Weight& w) const {
  int n = rank();
  std::vector<Rat> f(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cm_.a[i][j] != 0) f[i] += Rat(cm_.a[i][j]) * w.c[j];
  return f;
}

Weight RootSystem::from_fundamental(const std::vector<Rat>& f) const {
  int n = rank();
  Weight w = Weight::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.c[i] += inv_cartan_.at(i, j) * f[j];
  return w;
}

Weight RootSystem::from_fundamental_int(const std::vector<int>& f) const {
  std::vector<Rat> r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  return from_fundamental(r);
}

bool RootSystem::is_dominant_integral(const Weight& w) const {
  for (const Rat& f : fundamental_coords(w))
    if (f < 0 || f.get_den() != 1) return false;
  return true;
}

Weight RootSystem::simple_root(int i) const {
  Weight w = Weight::zero(rank());
  w.c[i] = 1;
  return w;
}

RootSystem build_root_system(const CartanMatrix& cm) { return RootSystem(cm); }

std::vector<WeylElement> weyl_elements_by_length(const RootSystem& rs, int k) {
  std::vector<WeylElement> out;
  for (const auto& w : rs.weyl())
    if (w.length == k) out.push_back(w);
  return out;
}

Weight dot_action(const WeylElement& w, const Weight& eta, const RootSystem& rs) {
  return w.apply(eta + rs.rho()) - rs.rho();
}

namespace {

long long kostant_rec(const RootSystem& rs, const GradingVector& lambda, int min_root,
                      std::map<std::pair<std::vector<int>, int>, long long>& memo) {
  if (lambda.is_zero()) return 1;
  if (!lambda.nonneg()) return 0;
  auto key = std::make_pair(lambda.c, min_root);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long total = 0;
  for (int r = min_root; r < rs.num_positive(); ++r)
    total += kostant_rec(rs, lambda - rs.root(r), r, memo);
  memo[key] = total;
  return total;
}

}  // namespace

long long kostant_partition(const RootSystem& rs, const GradingVector& lambda) {
  if (!lambda.nonneg()) return 0;
  std::map<std::pair<std::vector<int>, int>, long long> memo;
  return kostant_rec(rs, lambda, 0, memo);
}

namespace {

void cone_rec(int i, int rank, int remaining, std::vector<int>& cur,
              std::vector<GradingVector>& out) {
  if (i == rank) {
    out.push_back(GradingVector(cur));
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cur[i] = v;
    cone_rec(i + 1, rank, remaining - v, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<GradingVector> positive_cone(int rank, int bound) {
  std::vector<GradingVector> out;
  std::vector<int> cur(rank, 0);
  cone_rec(0, rank, bound, cur, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace nilcoh
