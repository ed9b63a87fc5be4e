#include <doctest.h>

#include <set>

#include "fixtures.h"
#include "lcp/bounded.h"

using namespace lcp;

TEST_CASE("depth 0 holds only the initial chronicle") {
  const Problem p = lcp::testing::truck();
  const BoundedProblem bp = gen_problem(p, 0);
  REQUIRE(bp.size() == 1);
  CHECK(bp.presence[0].constant_true);
  CHECK(bp.instances == std::vector<std::vector<std::size_t>>{{}});
}

TEST_CASE("depth 2 of the truck problem") {
  const Problem p = lcp::testing::truck();
  const BoundedProblem bp = gen_problem(p, 2);
  REQUIRE(bp.size() == 3);
  CHECK(bp.chronicle(1).id == "Go_1");
  CHECK(bp.chronicle(2).id == "Go_2");
  CHECK(bp.presence[1].id == "o_Go_1");
  CHECK(bp.presence[2].id == "o_Go_2");
  CHECK_FALSE(bp.presence[1].constant_true);
  CHECK(bp.instances[0] == std::vector<std::size_t>{1, 2});
}

TEST_CASE("nine templates at depth 4 give 36 optional chronicles") {
  const Problem p = lcp::testing::rovers_like();
  REQUIRE(p.templates.size() == 9);
  const BoundedProblem bp = gen_problem(p, 4);
  CHECK(bp.size() == 37);
  for (const auto& instances : bp.instances) CHECK(instances.size() == 4);
}

TEST_CASE("negative depth is rejected") { CHECK_THROWS(gen_problem(lcp::testing::truck(), -1)); }

TEST_CASE("tokens of the truck problem") {
  const Problem p = lcp::testing::truck();
  const BoundedProblem bp1 = gen_problem(p, 1);
  const auto conds = condition_tokens(bp1);
  const auto effs = effect_tokens(bp1);
  REQUIRE(conds.size() == 2);
  REQUIRE(effs.size() == 2);

  // Goal condition [t, t] loc(R1) == l, then Go's [start, start] loc(r) == ls.
  CHECK(conds[0].owner == 0);
  CHECK(conds[0].start == conds[0].end);
  CHECK(conds[1].owner == 1);
  CHECK(bp1.chronicle(1).variable(conds[1].start).label == "start");
  CHECK(bp1.chronicle(1).variable(conds[1].value).label == "ls");

  CHECK(effs[0].owner == 0);
  CHECK(effs[0].persistence == "init.eff0.t");
  CHECK(effs[1].owner == 1);
  CHECK(effs[1].persistence == "Go_1.eff0.t");
  CHECK(bp1.chronicle(1).variable(effs[1].end).label == "end");

  const BoundedProblem bp2 = gen_problem(p, 2);
  CHECK(condition_tokens(bp2).size() == 3);
  const auto effs2 = effect_tokens(bp2);
  REQUIRE(effs2.size() == 3);
  std::set<std::string> names;
  for (const auto& e : effs2) names.insert(e.persistence);
  CHECK(names.size() == 3);
}

TEST_CASE("problems without effects or goals have no tokens") {
  const Problem p = lcp::testing::parse_or_throw("type A = {a};\n");
  CHECK(condition_tokens(gen_problem(p, 0)).empty());
  CHECK(effect_tokens(gen_problem(p, 3)).empty());
}

TEST_CASE("token counts grow linearly and Π_k is contained in Π_k+1") {
  const Problem p = lcp::testing::rovers_like();
  std::size_t template_conditions = 0, template_effects = 0;
  for (const auto& a : p.templates) {
    template_conditions += a.body.conditions.size();
    template_effects += a.body.effects.size();
  }
  for (int k = 0; k <= 3; ++k) {
    CAPTURE(k);
    const BoundedProblem bp = gen_problem(p, k);
    CHECK(condition_tokens(bp).size() == p.initial.conditions.size() + k * template_conditions);
    CHECK(effect_tokens(bp).size() == p.initial.effects.size() + k * template_effects);

    const BoundedProblem next = gen_problem(p, k + 1);
    for (std::size_t a = 0; a < bp.instances.size(); ++a)
      for (std::size_t i = 0; i < bp.instances[a].size(); ++i)
        CHECK(bp.chronicle(bp.instances[a][i]) == next.chronicle(next.instances[a][i]));
  }
}

TEST_CASE("persistence timepoints are fresh") {
  const BoundedProblem bp = gen_problem(lcp::testing::rovers_like(), 2);
  std::set<std::string> ids;
  for (const auto& c : bp.chronicles)
    for (const auto& v : c.variables) CHECK(ids.insert(v.id).second);
  for (const auto& pr : bp.presence) CHECK(ids.insert(pr.id).second);
  for (const auto& e : effect_tokens(bp)) CHECK(ids.insert(e.persistence).second);
}
