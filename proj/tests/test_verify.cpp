#include "doctest.h"
#include "json.hpp"
#include "prook/verify.hpp"

using namespace prook;

TEST_CASE("every check passes on small grids") {
  VerifyOptions opt;
  opt.n_cap = 2;
  opt.c_cap = 2;
  const VerifyReport report = run_verification(opt);
  CHECK(report.passed());
  CHECK(report.checks.size() == 27);
  for (const auto& c : report.checks) {
    INFO(c.name);
    CHECK(c.result.passed);
    CHECK(c.result.cases > 0);
  }
  for (std::size_t i = 1; i < report.checks.size(); ++i)
    CHECK(report.checks[i - 1].name < report.checks[i].name);
}

TEST_CASE("a mutant expansion is caught with a witness") {
  VerifyOptions opt;
  opt.n_cap = 2;
  opt.c_cap = 1;
  opt.expansion = mutant_x_of;
  const VerifyReport report = run_verification(opt);
  CHECK_FALSE(report.passed());
  bool witnessed = false;
  for (const auto& c : report.checks)
    if (!c.result.passed && c.result.witness && !c.result.witness->diagrams.empty()) witnessed = true;
  CHECK(witnessed);
  const auto json = nlohmann::json::parse(to_json(report));
  CHECK(json["passed"] == false);
}

TEST_CASE("mutant differs from the true expansion") {
  const Diagram d(1, 1, {{1, 1, 1}});
  CHECK_FALSE(mutant_x_of(d) == x_of(d));
  CHECK(mutant_x_of(Diagram::empty(1, 1)) == x_of(Diagram::empty(1, 1)));
}

TEST_CASE("sampling path agrees") {
  VerifyOptions opt;
  opt.exhaustive_pairs = 10;
  opt.exhaustive_triples = 10;
  opt.samples = 200;
  CHECK(checks::associativity(3, 2, opt).passed);
  CHECK(checks::left_action_oracle(3, 2, opt).passed);
  CHECK(checks::distributivity(3, 2, opt).passed);
}

TEST_CASE("diagram cap") {
  VerifyOptions opt;
  opt.n_cap = 3;
  opt.c_cap = 2;
  opt.diagram_cap = 50;
  CHECK_THROWS_AS(run_verification(opt), CapExceeded);
}

TEST_CASE("json report layout") {
  VerifyOptions opt;
  opt.n_cap = 1;
  opt.c_cap = 1;
  const auto json = nlohmann::json::parse(to_json(run_verification(opt)));
  CHECK(json["passed"] == true);
  CHECK(json["n_cap"] == 1);
  CHECK(json["c_cap"] == 1);
  for (const auto& c : json["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c["witness"].is_null());
  }
}
