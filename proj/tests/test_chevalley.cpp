#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "nilcoh/chevalley.hpp"

using namespace nilcoh;

namespace {

// 3x3 strictly upper triangular matrices: the rank-2 oracle for A2
struct Mat3 {
  Rat a[3][3] = {};
};
Mat3 bracket(const Mat3& x, const Mat3& y) {
  Mat3 z;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) z.a[i][j] += x.a[i][k] * y.a[k][j] - y.a[i][k] * x.a[k][j];
  return z;
}

}  // namespace

TEST_CASE("A2 constants against the matrix realization") {
  RootSystem rs(CartanMatrix::preset("A2"));
  NilpotentAlgebra alg(rs);
  // e_{a1} = E12, e_{a2} = E23; [e_{a1}, e_{a2}] = E13
  Mat3 e1, e2;
  e1.a[0][1] = 1;
  e2.a[1][2] = 1;
  Mat3 br = bracket(e1, e2);
  CHECK(br.a[0][2] == 1);
  long n = alg.n_const(0, 1);
  CHECK((n == 1 || n == -1));
  CHECK(alg.n_const(1, 0) == -n);
  CHECK(alg.sum_index(0, 1) == 2);
  CHECK(alg.max_abs_n() == 1);
}

TEST_CASE("bracket vanishes when the sum is not a root") {
  for (const auto& name : CartanMatrix::preset_names()) {
    RootSystem rs(CartanMatrix::preset(name));
    NilpotentAlgebra alg(rs);
    for (int a = 0; a < alg.dim(); ++a)
      for (int b = 0; b < alg.dim(); ++b) {
        if (rs.root_index(rs.root(a) + rs.root(b)) < 0) {
          CHECK(alg.sum_index(a, b) == -1);
          CHECK(alg.n_const(a, b) == 0);
        }
      }
  }
}

TEST_CASE("constants have magnitude p+1 from the root strings") {
  for (const auto& name : CartanMatrix::preset_names()) {
    RootSystem rs(CartanMatrix::preset(name));
    NilpotentAlgebra alg(rs);
    for (int a = 0; a < alg.dim(); ++a)
      for (int b = 0; b < alg.dim(); ++b) {
        if (alg.sum_index(a, b) < 0) continue;
        // root-string oracle: largest p with b - p a still a root
        int p = 0;
        std::vector<int> cur = rs.root(b).c;
        while (true) {
          for (int i = 0; i < rs.rank(); ++i) cur[i] -= rs.root(a).c[i];
          if (!rs.is_root(cur)) break;
          ++p;
        }
        CHECK(std::abs(alg.n_const(a, b)) == p + 1);
      }
  }
}

TEST_CASE("G2 reaches constant 3, the doubly-laced types reach 2") {
  CHECK(NilpotentAlgebra(RootSystem(CartanMatrix::preset("G2"))).max_abs_n() == 3);
  CHECK(NilpotentAlgebra(RootSystem(CartanMatrix::preset("B2"))).max_abs_n() == 2);
  CHECK(NilpotentAlgebra(RootSystem(CartanMatrix::preset("C2"))).max_abs_n() == 2);
  CHECK(NilpotentAlgebra(RootSystem(CartanMatrix::preset("A3"))).max_abs_n() == 1);
}

TEST_CASE("full Jacobi identity including mixed sign pairs") {
  // the whole algebra on the basis e_b, f_b, h_i; brackets expand through
  // the signed constants and coroot vectors, so a sign error anywhere in the
  // mixed-constant machinery breaks some triple
  for (const auto& name : {"A2", "B2", "G2"}) {
    RootSystem rs(CartanMatrix::preset(name));
    NilpotentAlgebra alg(rs);
    int n = alg.dim();
    int rank = rs.rank();
    // basis encoding: 2*m = e_m, 2*m+1 = f_m, 2*n+i = h_i
    using Elt = std::map<int, Rat>;
    auto coroot_vector = [&](int m) {
      // beta-check = sum_i m_i (a_i, a_i) / (beta, beta) h_i
      Elt h;
      Rat norm = rs.root_norm2(rs.root(m));
      for (int i = 0; i < rank; ++i) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        Rat c = Rat(rs.root(m).c[i]) * rs.root_norm2(GradingVector(e)) / norm;
        if (c != 0) h[2 * n + i] = c;
      }
      return h;
    };
    auto basis_bracket = [&](int bx, int by) -> Elt {
      Elt out;
      bool xh = bx >= 2 * n, yh = by >= 2 * n;
      if (xh && yh) return out;
      if (xh || yh) {
        int h = xh ? bx : by;
        int v = xh ? by : bx;
        int m = v / 2;
        bool neg = v % 2;
        Weight wt = Weight::of(rs.root(m));
        if (neg) wt = -wt;
        std::vector<int> e(rank, 0);
        e[h - 2 * n] = 1;
        Rat pairing = rs.pair_coroot(wt, GradingVector(e));
        if (pairing != 0) out[v] = xh ? pairing : -pairing;
        return out;
      }
      int mx = bx / 2, my = by / 2;
      bool nx = bx % 2, ny = by % 2;
      std::vector<int> sum(rank);
      for (int i = 0; i < rank; ++i)
        sum[i] = (nx ? -1 : 1) * rs.root(mx).c[i] + (ny ? -1 : 1) * rs.root(my).c[i];
      if (std::all_of(sum.begin(), sum.end(), [](int v) { return v == 0; })) {
        Elt h = coroot_vector(mx);
        if (nx)
          for (auto& [k, c] : h) c = -c;
        return h;
      }
      GradingVector pos{sum};
      bool neg = false;
      if (!pos.nonneg() || rs.root_index(pos) < 0) {
        for (auto& v : pos.c) v = -v;
        neg = true;
      }
      int t = rs.root_index(pos);
      if (t < 0) return out;
      Rat c = alg.signed_const(mx, nx, my, ny);
      if (c != 0) out[2 * t + (neg ? 1 : 0)] = c;
      return out;
    };
    auto bracket = [&](const Elt& x, const Elt& y) {
      Elt out;
      for (const auto& [bx, cx] : x)
        for (const auto& [by, cy] : y)
          for (const auto& [b, c] : basis_bracket(bx, by)) {
            out[b] += cx * cy * c;
            if (out[b] == 0) out.erase(b);
          }
      return out;
    };
    int total = 2 * n + rank;
    for (int x = 0; x < total; ++x)
      for (int y = x + 1; y < total; ++y)
        for (int z = y + 1; z < total; ++z) {
          Elt ex{{x, Rat(1)}}, ey{{y, Rat(1)}}, ez{{z, Rat(1)}};
          Elt j = bracket(bracket(ex, ey), ez);
          for (const auto& [b, c] : bracket(bracket(ey, ez), ex)) {
            j[b] += c;
            if (j[b] == 0) j.erase(b);
          }
          for (const auto& [b, c] : bracket(bracket(ez, ex), ey)) {
            j[b] += c;
            if (j[b] == 0) j.erase(b);
          }
          CHECK(j.empty());
        }
  }
}

TEST_CASE("exterior power dimensions") {
  RootSystem a2(CartanMatrix::preset("A2"));
  NilpotentAlgebra alg(a2);
  // k=1 detects exactly the positive roots
  CHECK(exterior_power_dims(alg, 1, GradingVector({1, 1})) == 1);
  CHECK(exterior_power_dims(alg, 1, GradingVector({2, 1})) == 0);
  CHECK(exterior_power_dims(alg, 2, GradingVector({1, 1})) == 1);
  CHECK(exterior_power_dims(alg, 3, GradingVector({2, 2})) == 1);
  CHECK(exterior_power_dims(alg, 0, GradingVector({0, 0})) == 1);
  CHECK_THROWS_AS(exterior_power_dims(alg, -1, GradingVector({0, 0})), std::invalid_argument);

  // total mass over all k and lambda is 2^(number of positive roots)
  for (const auto& name : CartanMatrix::preset_names()) {
    RootSystem rs(CartanMatrix::preset(name));
    NilpotentAlgebra a(rs);
    long long total = 0;
    int hmax = 0;
    for (const auto& r : rs.positive_roots()) hmax += r.height();
    for (int k = 0; k <= a.dim(); ++k)
      for (const auto& l : positive_cone(rs.rank(), hmax)) total += exterior_power_dims(a, k, l);
    CHECK(total == (1LL << a.dim()));
  }
}
