#include "doctest.h"
#include "starq/verify.hpp"

using namespace starq;

TEST_CASE("rng determinism") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(7);
  Symbol s1 = c.symbol(2, 3, 3, 1);
  Rng d(7);
  Symbol s2 = d.symbol(2, 3, 3, 1);
  CHECK(s1 == s2);
}

TEST_CASE("suites pass on the default configuration") {
  RunConfig cfg;
  cfg.n = 1;
  cfg.cases = 8;
  cfg.max_deg = 2;
  for (const auto& suite : suite_names()) {
    auto results = run_suite(suite, cfg);
    CHECK(!results.empty());
    for (const auto& r : results) {
      CAPTURE(suite);
      CAPTURE(r.name);
      CAPTURE(r.witness);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("reports are deterministic and sorted") {
  RunConfig cfg;
  cfg.n = 1;
  cfg.cases = 4;
  cfg.max_deg = 2;
  cfg.seed = 9;
  auto r1 = run_suite("algebra", cfg);
  auto r2 = run_suite("algebra", cfg);
  CHECK(report_json("algebra", cfg, r1) == report_json("algebra", cfg, r2));
  for (std::size_t i = 1; i < r1.size(); ++i)
    CHECK(r1[i - 1].name < r1[i].name);
}

TEST_CASE("two-dimensional star suite with conformal geometry") {
  RunConfig cfg;
  cfg.n = 2;
  cfg.p = 2;
  cfg.q = 0;
  cfg.geometry = GeometryKind::Conformal;
  cfg.cases = 4;
  cfg.max_deg = 2;
  cfg.r_max = 2;
  for (const auto& suite : {std::string("bivectors"), std::string("operators")}) {
    auto results = run_suite(suite, cfg);
    for (const auto& r : results) {
      CAPTURE(suite);
      CAPTURE(r.name);
      CAPTURE(r.witness);
      CHECK(r.pass);
    }
  }
}
