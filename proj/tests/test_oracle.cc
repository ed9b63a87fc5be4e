#include <doctest.h>

#include "fixtures.h"
#include "lcp/anml.h"
#include "lcp/oracle.h"
#include "lcp/validator.h"
#include "random_problem.h"

using namespace lcp;

TEST_CASE("truck by enumeration") {
  const Problem& p = lcp::testing::truck();
  const OracleConfig cfg{12, 10'000'000};
  CHECK(std::holds_alternative<OracleUnsat>(brute_force_sat(p, 0, cfg)));

  const auto one = brute_force_sat(p, 1, cfg);
  REQUIRE(std::holds_alternative<OracleSat>(one));
  const Plan& w = std::get<OracleSat>(one).witness;
  REQUIRE(w.steps.size() == 1);
  CHECK(w.steps[0].action == "Go");
  CHECK(w.steps[0].params[1].symbol == "L0");
  const auto& to = w.steps[0].params[2].symbol;
  CHECK((to == "L2" || to == "L3"));
  CHECK(w.steps[0].end == w.steps[0].start + 10);
  CHECK(validate_plan(p, w).valid());

  // Go lasts 10, so a shorter horizon leaves no room for it.
  CHECK(std::holds_alternative<OracleUnsat>(brute_force_sat(p, 1, {9, 10'000'000})));
}

TEST_CASE("a goal that holds initially") {
  const Problem p = lcp::testing::parse_or_throw(R"(
type A = {a, b};
fluent A f;
action Flip() { duration := 1; [start, end] f := b; };
f := a;
goal (timepoint t) { [t] f == a; };
)");
  const auto r = brute_force_sat(p, 0, {3, 1000});
  REQUIRE(std::holds_alternative<OracleSat>(r));
  CHECK(std::get<OracleSat>(r).witness.steps.empty());
  CHECK(validate_plan(p, std::get<OracleSat>(r).witness).valid());
}

TEST_CASE("the budget is checked before enumerating") {
  const auto r = brute_force_sat(lcp::testing::truck(), 2, {12, 1000});
  REQUIRE(std::holds_alternative<BudgetExceeded>(r));
  CHECK(std::get<BudgetExceeded>(r).needed > 1000);
}

TEST_CASE("witnesses validate and verdicts are monotone in k") {
  int sat = 0;
  int checked = 0;
  for (std::uint32_t seed = 1; seed <= 40; ++seed) {
    const auto inst = lcp::testing::random_instance(seed);
    const auto parsed = parse_problem(inst.source);
    REQUIRE(parsed.ok());
    const Problem& p = *parsed.problem;
    const OracleConfig cfg{std::min<std::int64_t>(inst.horizon, 5), 300'000};
    bool previous = false;
    for (int k = 0; k <= 2; ++k) {
      const auto r = brute_force_sat(p, k, cfg);
      if (std::holds_alternative<BudgetExceeded>(r)) break;
      const bool is_sat = std::holds_alternative<OracleSat>(r);
      CAPTURE(seed);
      CAPTURE(k);
      if (previous) CHECK(is_sat);
      if (is_sat) {
        CHECK(validate_plan(p, std::get<OracleSat>(r).witness).valid());
        ++sat;
      }
      previous = is_sat;
      ++checked;
    }
  }
  CHECK(checked > 40);
  CHECK(sat > 0);
}
