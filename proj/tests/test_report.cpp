#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nilcoh/verify.hpp"

using namespace nilcoh;

TEST_CASE("config validation names the offending field") {
  RunConfig cfg;
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("exactly one"), std::invalid_argument);
  cfg.preset = "A2";
  cfg.cartan = CartanMatrix::preset("A2");
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.cartan.reset();
  cfg.bound = -2;
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("bound"), std::invalid_argument);
  cfg.bound = 4;
  cfg.genus = 0;
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("genus"), std::invalid_argument);
  cfg.genus = 2;
  CHECK_NOTHROW(cfg.validate());
  cfg.preset = "Z9";
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("unknown type"), std::invalid_argument);
}

TEST_CASE("config json round trip") {
  RunConfig cfg;
  cfg.preset = "B2";
  cfg.bound = 5;
  cfg.genus = 3;
  cfg.etas = {{1, 0}};
  cfg.jobs = 2;
  RunConfig back = RunConfig::from_json(cfg.to_json());
  CHECK(back.preset == "B2");
  CHECK(back.bound == 5);
  CHECK(back.genus == 3);
  CHECK(back.etas == cfg.etas);
  CHECK(back.jobs == 2);
}

TEST_CASE("empty suite selection runs nothing and reports success") {
  RunConfig cfg;
  cfg.preset = "A1";
  cfg.bound = 2;
  cfg.suites = std::vector<std::string>{};
  Report rep = run_verification_suite(cfg);
  CHECK(rep.checks.empty());
  CHECK(rep.all_pass());
  CHECK(rep.to_json()["summary"]["total"] == 0);
}

TEST_CASE("suite output is deterministic across parallelism degrees") {
  RunConfig one;
  one.preset = "A2";
  one.bound = 3;
  one.genus = 2;
  one.jobs = 1;
  RunConfig two = one;
  two.jobs = 2;
  Report r1 = run_verification_suite(one);
  Report r2 = run_verification_suite(two);
  CHECK(r1.to_json(false) == r2.to_json(false));
  CHECK(r1.all_pass());
}

TEST_CASE("summary counts stay consistent with the records") {
  RunConfig cfg;
  cfg.preset = "A1";
  cfg.bound = 3;
  cfg.genus = 2;
  Report rep = run_verification_suite(cfg);
  CHECK(rep.passed() + rep.failed() == static_cast<int>(rep.checks.size()));
  nlohmann::json j = rep.to_json();
  CHECK(j["summary"]["total"] == rep.checks.size());
  CHECK(j["summary"]["passed"] == rep.passed());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("check_id"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("actual"));
    CHECK(c.contains("provenance"));
    CHECK(c.contains("pass"));
    CHECK((c["pass"] == (c["expected"] == c["actual"])));
  }
}

TEST_CASE("a failing configuration is recorded, not thrown") {
  // h1 override with a bogus per-check crash is hard to trigger from here;
  // instead validate the error path through a config whose gl2 report throws
  RunConfig cfg;
  cfg.preset = "A1";
  cfg.bound = 2;
  cfg.h1 = 3;  // gl2 suite skipped under override; everything else still runs
  Report rep = run_verification_suite(cfg);
  CHECK(rep.all_pass());
  for (const auto& c : rep.checks) CHECK(c.id != "gl2_koszul_terms");
}

TEST_CASE("a throwing check becomes a failing record, not a crash") {
  RunConfig cfg;
  cfg.preset = "A2";
  cfg.bound = 2;
  cfg.genus = 2;
  cfg.suites = std::vector<std::string>{"cohomology"};
  cfg.etas = {{-1, 0}};  // not dominant: the module constructor throws inside the check
  Report rep;
  CHECK_NOTHROW(rep = run_verification_suite(cfg));
  REQUIRE(rep.checks.size() == 1);
  CHECK_FALSE(rep.checks[0].pass);
  CHECK(rep.checks[0].actual.contains("error"));
}
