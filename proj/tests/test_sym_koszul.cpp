#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nilcoh/sym_koszul.hpp"

using namespace nilcoh;

namespace {

std::vector<Rat> key1(int d) { return {Rat(d)}; }

}  // namespace

TEST_CASE("free module has Tor only in degree zero") {
  GradedSpace w = GradedSpace::uniform(2, 1);
  GradedDims t = sym_koszul_tor(GradedModule::free_rank_one(w), 4);
  CHECK(t.entries.size() == 1);
  CHECK(t.at(key1(0), 0) == 1);
}

TEST_CASE("Tor of the augmentation module is the exterior algebra") {
  for (int wd = 1; wd <= 3; ++wd) {
    GradedSpace w = GradedSpace::uniform(wd, 1);
    GradedDims t = sym_koszul_tor(GradedModule::augmentation(w), wd + 1);
    for (int k = 0; k <= wd; ++k) CHECK(t.at(key1(k), k) == to_ll(binomial(wd, k)));
    long long total = 0;
    for (const auto& [k, v] : t.entries) total += v;
    CHECK(total == (1LL << wd));
  }
}

TEST_CASE("one-relation quotient: Tor_0 and Tor_1 one-dimensional, nothing higher") {
  GradedSpace w = GradedSpace::uniform(2, 1);
  SymPoly rel;
  rel.terms[{1, 0}] = 1;
  rel.terms[{0, 1}] = 3;
  GradedDims t = sym_koszul_tor(GradedModule::quotient_by_one(w, rel), 5);
  CHECK(t.at(key1(0), 0) == 1);
  CHECK(t.at(key1(1), 1) == 1);
  long long total = 0;
  for (const auto& [k, v] : t.entries) total += v;
  CHECK(total == 2);
}

TEST_CASE("koszul route equals the bar resolution route") {
  for (int wd = 1; wd <= 3; ++wd) {
    GradedSpace w = GradedSpace::uniform(wd, 1);
    CHECK(sym_koszul_tor(GradedModule::augmentation(w), 4) ==
          tor_bar_resolution(GradedModule::augmentation(w), 4));
    SymPoly rel = SymPoly::var(0, wd);
    CHECK(sym_koszul_tor(GradedModule::quotient_by_one(w, rel), 4) ==
          tor_bar_resolution(GradedModule::quotient_by_one(w, rel), 4));
  }
  // a quadratic relation as well
  GradedSpace w = GradedSpace::uniform(2, 1);
  SymPoly quad;
  quad.terms[{2, 0}] = 1;
  quad.terms[{0, 2}] = -1;
  CHECK(sym_koszul_tor(GradedModule::quotient_by_one(w, quad), 5) ==
        tor_bar_resolution(GradedModule::quotient_by_one(w, quad), 5));
}

TEST_CASE("lattice-graded variables work as well") {
  // W with generators in grades (1,0) and (0,1)
  GradedSpace w;
  w.lattice_rank = 2;
  w.gens = {GradingVector({1, 0}), GradingVector({0, 1})};
  GradedDims t = sym_koszul_tor(GradedModule::augmentation(w), 3);
  CHECK(t.at({Rat(0), Rat(0)}, 0) == 1);
  CHECK(t.at({Rat(1), Rat(0)}, 1) == 1);
  CHECK(t.at({Rat(0), Rat(1)}, 1) == 1);
  CHECK(t.at({Rat(1), Rat(1)}, 2) == 1);
  CHECK(sym_koszul_tor(GradedModule::augmentation(w), 3) ==
        tor_bar_resolution(GradedModule::augmentation(w), 3));
}

TEST_CASE("inhomogeneous presentations are rejected") {
  GradedSpace w = GradedSpace::uniform(2, 1);
  GradedModule m = GradedModule::free_rank_one(w);
  SymPoly bad;
  bad.terms[{1, 0}] = 1;
  bad.terms[{2, 0}] = 1;  // mixes grades 1 and 2
  m.relations.push_back({bad});
  CHECK_THROWS_AS(sym_koszul_tor(m, 3), std::invalid_argument);
  // zero-grade generators are rejected too
  GradedSpace wz;
  wz.lattice_rank = 1;
  wz.gens = {GradingVector({0})};
  CHECK_THROWS_AS(sym_koszul_tor(GradedModule::augmentation(wz), 2), std::invalid_argument);
}
