#include <doctest.h>

#include <set>

#include "lcp/model.h"

using namespace lcp;

namespace {

// The Go action built directly, without the parser.
struct TruckModel {
  Problem p;
  TypeId truck, loc;
  FluentId at;

  TruckModel() {
    truck = p.add_type({"Truck", TypeKind::Objects, {"R1"}, 0, 0});
    loc = p.add_type({"Loc", TypeKind::Objects, {"L0", "L1", "L2", "L3"}, 0, 0});
    p.fluents.push_back({"loc", {truck}, loc});
    at = FluentId{0};

    ActionTemplate go;
    go.name = "Go";
    Chronicle& c = go.body;
    c.id = "Go";
    c.template_name = "Go";
    const VarIndex r = c.add_variable({"Go.r", "r", truck, std::nullopt});
    const VarIndex ls = c.add_variable({"Go.ls", "ls", loc, std::nullopt});
    const VarIndex le = c.add_variable({"Go.le", "le", loc, std::nullopt});
    const VarIndex ts = c.add_variable({"Go.ts", "ts", kTimeType, std::nullopt});
    const VarIndex te = c.add_variable({"Go.te", "te", kTimeType, std::nullopt});
    c.start = ts;
    c.end = te;
    c.constraints.push_back(Constraint::compare(CmpOp::Eq, te, ts, 10));
    c.constraints.push_back(Constraint::compare(CmpOp::Ne, ls, le));
    c.conditions.push_back({ts, ts, {at, {r}}, ls});
    c.effects.push_back({ts, te, {at, {r}}, le});
    go.parameters = {r, ls, le};
    p.templates.push_back(go);
  }
};

}  // namespace

TEST_CASE("the Go chronicle is well formed") {
  TruckModel m;
  CHECK(validate_chronicle(m.p.templates[0].body, m.p).empty());
  CHECK(validate_problem(m.p).empty());
}

TEST_CASE("an empty chronicle is well formed") {
  Problem p;
  Chronicle c;
  c.id = "empty";
  CHECK(validate_chronicle(c, p).empty());
}

TEST_CASE("a condition on a timepoint outside V is reported once") {
  TruckModel m;
  Chronicle c = m.p.templates[0].body;
  c.conditions[0].end = VarIndex{42};
  const auto d = validate_chronicle(c, m.p);
  REQUIRE(d.size() == 1);
  CHECK(d[0].chronicle == "Go");
  CHECK(d[0].message.find("unbound variable") != std::string::npos);
}

TEST_CASE("ill-formed chronicles produce diagnostics") {
  TruckModel m;
  Chronicle base = m.p.templates[0].body;

  SUBCASE("arity mismatch") {
    base.effects[0].sv.params.push_back(VarIndex{0});
    CHECK_FALSE(validate_chronicle(base, m.p).empty());
  }
  SUBCASE("value of the wrong type") {
    base.conditions[0].value = VarIndex{0};  // r is a Truck, loc holds a Loc
    CHECK_FALSE(validate_chronicle(base, m.p).empty());
  }
  SUBCASE("non-time timepoint") {
    base.conditions[0].start = VarIndex{1};
    CHECK_FALSE(validate_chronicle(base, m.p).empty());
  }
  SUBCASE("ordering objects") {
    base.constraints.push_back(Constraint::compare(CmpOp::Lt, VarIndex{1}, VarIndex{2}));
    CHECK_FALSE(validate_chronicle(base, m.p).empty());
  }
  SUBCASE("comparing different types") {
    base.constraints.push_back(Constraint::compare(CmpOp::Eq, VarIndex{0}, VarIndex{1}));
    CHECK_FALSE(validate_chronicle(base, m.p).empty());
  }
  SUBCASE("constant outside its type") {
    base.add_variable({"Go.bad", "bad", m.loc, 7});
    CHECK_FALSE(validate_chronicle(base, m.p).empty());
  }
  SUBCASE("action without designated start") {
    base.start.reset();
    CHECK_FALSE(validate_chronicle(base, m.p).empty());
  }
}

TEST_CASE("problem-level invariants") {
  TruckModel m;
  SUBCASE("names are unique across types, fluents and actions") {
    m.p.fluents.push_back({"Go", {}, kBoolType});
    CHECK_FALSE(validate_problem(m.p).empty());
  }
  SUBCASE("integer ranges are non-empty") {
    m.p.add_type({"Level", TypeKind::IntRange, {}, 3, 1});
    CHECK_FALSE(validate_problem(m.p).empty());
  }
  SUBCASE("enumerations have distinct members") {
    m.p.add_type({"Dup", TypeKind::Objects, {"x", "x"}, 0, 0});
    CHECK_FALSE(validate_problem(m.p).empty());
  }
}

TEST_CASE("type domains") {
  const TypeDef loc{"Loc", TypeKind::Objects, {"L0", "L1"}, 0, 0};
  CHECK(loc.contains(1));
  CHECK_FALSE(loc.contains(2));
  CHECK(loc.render(1) == "L1");
  CHECK(loc.ordinal("L1") == 1);
  CHECK_FALSE(loc.ordinal("L9").has_value());

  const TypeDef level{"Level", TypeKind::IntRange, {}, -2, 3};
  CHECK(level.contains(-2));
  CHECK_FALSE(level.contains(4));
  CHECK(level.max_value() == 3);

  Problem p;
  CHECK(p.type(kTimeType).contains(1'000'000));
  CHECK_FALSE(p.type(kTimeType).contains(-1));
  CHECK_FALSE(p.type(kTimeType).max_value().has_value());
}

TEST_CASE("instantiation renames every variable") {
  TruckModel m;
  const Chronicle go1 = instantiate_template(m.p.templates[0], 1, m.p);
  CHECK(go1.id == "Go_1");
  CHECK(go1.template_name == "Go");
  CHECK(go1.instance == 1);
  std::vector<std::string> ids;
  for (const auto& v : go1.variables) ids.push_back(v.id);
  CHECK(ids == std::vector<std::string>{"Go_1.r", "Go_1.ls", "Go_1.le", "Go_1.ts", "Go_1.te"});
  CHECK(validate_chronicle(go1, m.p).empty());

  SUBCASE("deterministic") { CHECK(instantiate_template(m.p.templates[0], 1, m.p) == go1); }

  SUBCASE("different indices share no variable") {
    const Chronicle go2 = instantiate_template(m.p.templates[0], 2, m.p);
    std::set<std::string> seen;
    for (const auto& v : go1.variables) seen.insert(v.id);
    for (const auto& v : go2.variables) CHECK(seen.count(v.id) == 0);
  }

  SUBCASE("index must be positive") { CHECK_THROWS_AS(instantiate_template(m.p.templates[0], 0, m.p), ModelError); }

  SUBCASE("ill-formed templates are rejected") {
    ActionTemplate broken = m.p.templates[0];
    broken.body.effects[0].value = VarIndex{9};
    CHECK_THROWS_AS(instantiate_template(broken, 1, m.p), ModelError);
  }
}

TEST_CASE("a template without parameters keeps only its timepoints") {
  Problem p;
  ActionTemplate wait;
  wait.name = "Wait";
  wait.body.id = "Wait";
  wait.body.template_name = "Wait";
  wait.body.start = wait.body.add_variable({"Wait.start", "start", kTimeType, std::nullopt});
  wait.body.end = wait.body.add_variable({"Wait.end", "end", kTimeType, std::nullopt});
  const Chronicle c = instantiate_template(wait, 3, p);
  REQUIRE(c.variables.size() == 2);
  CHECK(c.variables[0].id == "Wait_3.start");
  CHECK(c.variables[1].id == "Wait_3.end");
}
