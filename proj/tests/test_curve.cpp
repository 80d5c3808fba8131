#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nilcoh/curve.hpp"

using namespace nilcoh;

TEST_CASE("power cohomology examples") {
  PowerCohomology d0 = power_cohomology(0, 2, 0, 0, PowerFlavor::symmetric);
  CHECK(d0.dims.at({}, 0) == 1);
  CHECK(d0.dims.total() == 1);

  PowerCohomology sym = power_cohomology(0, 2, 0, 2, PowerFlavor::symmetric);
  CHECK(sym.dims.at({}, 2) == 1);  // Lambda^2 of a two-dimensional space
  CHECK(sym.dims.total() == 1);
  CHECK(sym.shift == 0);

  PowerCohomology ext = power_cohomology(0, 2, 0, 2, PowerFlavor::exterior);
  CHECK(ext.dims.at({}, 2) == 3);  // Sym^2 of a two-dimensional space
  CHECK(ext.dims.total() == 3);
  CHECK(ext.shift == 2);

  CHECK_THROWS_AS(power_cohomology(0, 2, 0, -1, PowerFlavor::symmetric), std::invalid_argument);
}

TEST_CASE("flavors swap binomial and multiset counts across h1") {
  for (int h1 = 0; h1 <= 4; ++h1)
    for (int d = 0; d <= 4; ++d) {
      PowerCohomology sym = power_cohomology(0, h1, 0, d, PowerFlavor::symmetric);
      PowerCohomology ext = power_cohomology(0, h1, 0, d, PowerFlavor::exterior);
      CHECK(sym.dims.at({}, d) == to_ll(binomial(h1, d)));
      CHECK(ext.dims.at({}, d) == to_ll(multichoose(h1, d)));
    }
  // a genuinely mixed case: h = (1,2,1), d = 2, symmetric
  PowerCohomology mixed = power_cohomology(1, 2, 1, 2, PowerFlavor::symmetric);
  // (a,b,c): (2,0,0)->deg0 1; (1,1,0)->deg1 2; (0,2,0)->deg2 1; (1,0,1)->deg2 1;
  // (0,1,1)->deg3 2; (0,0,2)->deg4 1
  CHECK(mixed.dims.at({}, 0) == 1);
  CHECK(mixed.dims.at({}, 1) == 2);
  CHECK(mixed.dims.at({}, 2) == 2);
  CHECK(mixed.dims.at({}, 3) == 2);
  CHECK(mixed.dims.at({}, 4) == 1);
}

TEST_CASE("upsilon dimensions by decomposition") {
  RootSystem a2(CartanMatrix::preset("A2"));
  CurveModel g2curve;
  g2curve.genus = 2;  // h1 = 2
  CHECK(upsilon_total(a2, g2curve, GradingVector({0, 0})) == 1);
  CHECK(upsilon_total(a2, g2curve, GradingVector({1, 0})) == 2);
  // theta: 4 from the pair of simples, 2 from theta itself
  CHECK(upsilon_total(a2, g2curve, GradingVector({1, 1})) == 6);
  GradedDims d = upsilon_dims(a2, g2curve, GradingVector({1, 1}));
  CHECK(d.at({Rat(1), Rat(1)}, 0) == 6);
}

TEST_CASE("r_hilbert examples and equality with upsilon") {
  RootSystem a1(CartanMatrix::preset("A1"));
  CurveModel cv;
  cv.genus = 2;
  HilbertSeries r1 = r_hilbert(a1, cv, 8);
  for (int d = 0; d <= 8; ++d) CHECK(r1.at({d}) == d + 1);

  RootSystem a2(CartanMatrix::preset("A2"));
  HilbertSeries r2 = r_hilbert(a2, cv, 6);
  CHECK(r2.at({0, 0}) == 1);
  CHECK(r2.at({1, 1}) == 6);
  for (const auto& l : positive_cone(2, 6)) CHECK(r2.at(l.c) == upsilon_total(a2, cv, l));

  CHECK_THROWS_AS(r_hilbert(a2, cv, -1), std::invalid_argument);
  CurveModel bad;
  bad.genus = 0;
  CHECK_THROWS_AS(r_hilbert(a2, bad, 3), std::invalid_argument);
}

TEST_CASE("degenerate model: series collapse") {
  RootSystem a2(CartanMatrix::preset("A2"));
  CurveModel g1;
  g1.genus = 1;  // h1 = 0 on every root line
  CHECK(r_hilbert(a2, g1, 5).is_one());
  NilpotentAlgebra alg(a2);
  HighestWeightModule v(alg, a2.from_fundamental_int({1, 1}));
  HilbertSeries hk = hecke_hilbert(a2, g1, v, 5);
  // the fiber series reduces to the character
  long long total = 0;
  for (const auto& [k, val] : hk.coeff) total += val;
  CHECK(total == v.dim());
  for (const auto& w : v.weights()) {
    std::vector<int> key;
    for (const Rat& f : a2.fundamental_coords(w)) key.push_back(static_cast<int>(to_ll(f)));
    CHECK(hk.at(key) == v.weight_dim(w));
  }
}

TEST_CASE("hecke series: rank one ladder 2d+1 and adjoint spot check") {
  RootSystem a1(CartanMatrix::preset("A1"));
  NilpotentAlgebra n1(a1);
  CurveModel cv;
  cv.genus = 2;
  HighestWeightModule v(n1, a1.from_fundamental_int({1}));
  HilbertSeries hk = hecke_hilbert(a1, cv, v, 6);
  // coefficient at omega - d alpha is (d+1) + d = 2d+1 while both
  // contributions fit the bound
  for (int d = 0; d <= 6; ++d) {
    long long expect = (d + 1) + d;
    if (d == 0) expect = 1;  // the lower weight only enters from d >= 1
    CHECK(hk.at({1 - 2 * d}) == expect);
  }

  // trivial module gives the base series on negated keys
  RootSystem a2(CartanMatrix::preset("A2"));
  NilpotentAlgebra n2(a2);
  HighestWeightModule triv(n2, Weight::zero(2));
  HilbertSeries ht = hecke_hilbert(a2, cv, triv, 4);
  HilbertSeries r = r_hilbert(a2, cv, 4);
  for (const auto& l : positive_cone(2, 4)) {
    Weight w = -Weight::of(l);
    std::vector<int> key;
    for (const Rat& f : a2.fundamental_coords(w)) key.push_back(static_cast<int>(to_ll(f)));
    CHECK(ht.at(key) == r.at(l.c));
  }

  // adjoint at nu = 0: sum over weights nu' of mult(nu') u(nu')
  HighestWeightModule adj(n2, a2.from_fundamental_int({1, 1}));
  HilbertSeries ha = hecke_hilbert(a2, cv, adj, 6);
  long long expect = 0;
  for (const auto& w : adj.weights()) {
    Weight d = w;  // lambda = nu' - 0
    bool cone = true;
    GradingVector lam{std::vector<int>(2, 0)};
    for (int i = 0; i < 2; ++i) {
      if (d.c[i] < 0 || d.c[i].get_den() != 1) cone = false;
      else lam.c[i] = static_cast<int>(to_ll(d.c[i].get_num()));
    }
    if (cone) expect += adj.weight_dim(w) * upsilon_total(a2, cv, lam);
  }
  CHECK(ha.at({0, 0}) == expect);
}

TEST_CASE("strata partitions") {
  RootSystem a1(CartanMatrix::preset("A1"));
  auto p1 = strata_partitions(a1, GradingVector({1}));
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].size == 1);
  auto p2 = strata_partitions(a1, GradingVector({2}));
  REQUIRE(p2.size() == 2);
  std::set<int> sizes;
  for (const auto& p : p2) sizes.insert(p.size);
  CHECK(sizes == std::set<int>{1, 2});

  RootSystem a2(CartanMatrix::preset("A2"));
  auto pth = strata_partitions(a2, GradingVector({1, 1}));
  CHECK(pth.size() == 2);  // {theta} and {a1, a2}

  CHECK(strata_partitions(a2, GradingVector({0, 0})).empty());

  // generating identity against prod over nonzero mu of (1-t^mu)^{-1}
  int bound = 4;
  HilbertSeries prod = HilbertSeries::one(2, bound);
  for (const auto& mu : positive_cone(2, bound)) {
    if (mu.is_zero()) continue;
    HilbertSeries geom(2, bound);
    for (int k = 0; k * mu.height() <= bound; ++k)
      geom.add({k * mu.c[0], k * mu.c[1]}, 1);
    prod = prod.mul(geom);
  }
  for (const auto& l : positive_cone(2, bound)) {
    long long count = l.is_zero() ? 1 : static_cast<long long>(strata_partitions(a2, l).size());
    CHECK(count == prod.at(l.c));
  }
}

TEST_CASE("global inversion: closed form and unit product") {
  RootSystem a1(CartanMatrix::preset("A1"));
  CurveModel cv;
  cv.genus = 2;
  GlobalInversionReport r = global_inversion(a1, cv, 6);
  CHECK(r.pass);
  // E = 1 - 2t + t^2
  for (const auto& row : r.rows) {
    int d = row.lambda.c[0];
    long long expect = d == 0 ? 1 : (d == 1 ? -2 : (d == 2 ? 1 : 0));
    CHECK(row.euler == expect);
  }
  RootSystem a2(CartanMatrix::preset("A2"));
  CHECK(global_inversion(a2, cv, 4).pass);
  CurveModel g3;
  g3.genus = 3;
  CHECK(global_inversion(a2, g3, 4).pass);
}

TEST_CASE("gl2 report across small genus") {
  Gl2Report g1 = gl2_report(1, 6);
  CHECK(g1.pass);
  CHECK(g1.wdim == 0);
  REQUIRE(g1.rows.size() == 1);
  CHECK(g1.rows[0].binom == 1);

  Gl2Report g2 = gl2_report(2, 6);
  CHECK(g2.pass);
  std::vector<long long> dims;
  for (const auto& row : g2.rows) dims.push_back(row.binom);
  CHECK(dims == std::vector<long long>{1, 2, 1});

  Gl2Report g3 = gl2_report(3, 6);
  CHECK(g3.pass);
  dims.clear();
  for (const auto& row : g3.rows) dims.push_back(row.binom);
  CHECK(dims == std::vector<long long>{1, 4, 6, 4, 1});

  CHECK_THROWS_AS(gl2_report(0, 6), std::invalid_argument);
}

TEST_CASE("per-root overrides and series bound discipline") {
  RootSystem a2(CartanMatrix::preset("A2"));
  CurveModel cv;
  cv.genus = 2;
  cv.per_root[0] = 0;  // kill one simple root line
  CHECK(upsilon_total(a2, cv, GradingVector({1, 0})) == 0);
  CHECK(upsilon_total(a2, cv, GradingVector({0, 1})) == 2);
  HilbertSeries r = r_hilbert(a2, cv, 4);
  for (const auto& l : positive_cone(2, 4)) CHECK(r.at(l.c) == upsilon_total(a2, cv, l));

  HilbertSeries a(2, 3), b(2, 5);
  a.add({1, 0}, 1);
  b.add({0, 1}, 1);
  CHECK(a.mul(b).bound == 3);
  CHECK_THROWS_AS(HilbertSeries(2, -1), std::invalid_argument);
}
