#include <doctest.h>

#include <random>

#include "fixtures.h"
#include "lcp/anml.h"
#include "lcp/problem_json.h"

using namespace lcp;
using lcp::testing::parse_or_throw;

namespace {

std::vector<std::string> messages(const ParseResult& r) {
  std::vector<std::string> out;
  for (const auto& d : r.diagnostics) out.push_back(d.message);
  return out;
}

bool mentions(const ParseResult& r, const std::string& needle) {
  for (const auto& d : r.diagnostics)
    if (d.message.find(needle) != std::string::npos) return true;
  return false;
}

const char* kTypes = R"(
type Truck = {R1, R2};
type Loc = {L0, L1, L2};
fluent Loc loc(Truck r);
)";

}  // namespace

TEST_CASE("the truck problem") {
  const Problem p = lcp::testing::truck();
  REQUIRE(p.templates.size() == 1);
  const ActionTemplate& go = p.templates[0];
  CHECK(go.name == "Go");
  CHECK(go.parameters.size() == 3);
  CHECK(go.body.conditions.size() == 1);
  CHECK(go.body.effects.size() == 1);
  // duration and ls != le
  CHECK(go.body.constraints.size() == 2);
  CHECK(go.body.variable(*go.body.start).label == "start");
  CHECK(go.body.variable(*go.body.end).label == "end");

  CHECK(p.initial.effects.size() == 1);
  CHECK(p.initial.conditions.size() == 1);
  // t < 100 and l in {L2, L3}
  CHECK(p.initial.constraints.size() == 2);
  const auto t = p.initial.find_label("t");
  const auto l = p.initial.find_label("l");
  REQUIRE(t);
  REQUIRE(l);
  CHECK(p.initial.conditions[0].start == *t);
  CHECK(p.initial.conditions[0].value == *l);
  // The initial fact sits at [0, 0].
  const auto& init = p.initial.effects[0];
  CHECK(init.start == init.end);
  CHECK(p.initial.variable(init.start).value == 0);
}

TEST_CASE("type declarations alone give an empty problem") {
  const Problem p = parse_or_throw("type A = {a, b};\ntype Level = [0, 4];\ntype B;\ninstance B b1, b2;\n");
  CHECK(p.templates.empty());
  CHECK(p.initial.conditions.empty());
  CHECK(p.initial.effects.empty());
  REQUIRE(p.find_type("B"));
  CHECK(p.type(*p.find_type("B")).members == std::vector<std::string>{"b1", "b2"});
  CHECK(p.type(*p.find_type("Level")).kind == TypeKind::IntRange);
}

TEST_CASE("arity mismatch is reported with its position") {
  const auto r = parse_problem(std::string(kTypes) + "loc(R1, R1) := L0;\n");
  REQUIRE_FALSE(r.ok());
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].message.find("takes 1 argument") != std::string::npos);
  CHECK(r.diagnostics[0].span.line == 5);
  CHECK(r.diagnostics[0].span.column == 1);
}

TEST_CASE("syntax errors stop parsing at the first problem") {
  const auto r = parse_problem("type A = {a, b}\nfluent A f;\n");
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].message == "expected ';' but found 'fluent'");
  CHECK(r.diagnostics[0].span.line == 2);
  CHECK(format_diagnostic(r.diagnostics[0]) == "2:1: error: expected ';' but found 'fluent'");
  CHECK_FALSE(r.problem.has_value());
}

TEST_CASE("type errors are collected") {
  const auto r = parse_problem(std::string(kTypes) + R"(
loc(L0) := L0;
speed(R1) := L0;
loc(R1) := R2;
loc(R1) := Nowhere;
)");
  REQUIRE_FALSE(r.ok());
  CHECK(r.diagnostics.size() == 4);
  CHECK(mentions(r, "'L0' is a Loc, expected Truck"));
  CHECK(mentions(r, "unknown fluent 'speed'"));
  CHECK(mentions(r, "'R2' is a Truck, expected Loc"));
  CHECK(mentions(r, "unknown identifier 'Nowhere'"));
}

TEST_CASE("statement forms inside actions") {
  const Problem p = parse_or_throw(std::string(kTypes) + R"(
fluent boolean busy(Truck r);
action Move(Truck r, Loc a, Loc b) {
  duration :in [2, 5];
  [all] busy(r) == false;
  [start + 1] loc(r) == a;
  [start, end - 1] loc(r) := b;
  [3] busy(r);
  end <= start + 4;
};
)");
  const Chronicle& c = p.templates[0].body;
  // r a b start end, then constants and derived timepoints in order of appearance
  CHECK(c.variables[3].label == "start");
  CHECK(c.variables[4].label == "end");
  CHECK(c.find_label("false"));
  CHECK(c.find_label("start+1"));
  CHECK(c.find_label("end-1"));
  CHECK(c.find_label("@3"));
  CHECK(c.find_label("true"));
  REQUIRE(c.conditions.size() == 3);
  CHECK(c.conditions[0].start == *c.start);
  CHECK(c.conditions[0].end == *c.end);
  // duration interval (one constraint), two derived timepoints, end <= start + 4
  CHECK(c.constraints.size() == 4);
  CHECK(c.constraints[0].kind == ExprKind::And);
  CHECK(c.constraints[3] == Constraint::compare(CmpOp::Le, *c.end, *c.start, 4));
}

TEST_CASE("comparison operators are normalised") {
  const Problem p = parse_or_throw(R"(
type Level = [0, 9];
goal (timepoint t, timepoint u, Level x) {
  t > u + 2;
  x >= 3;
  5 < t;
};
)");
  const Chronicle& c = p.initial;
  const VarIndex t = *c.find_label("t");
  const VarIndex u = *c.find_label("u");
  const VarIndex x = *c.find_label("x");
  REQUIRE(c.constraints.size() == 3);
  CHECK(c.constraints[0] == Constraint::compare(CmpOp::Lt, u, t, -2));
  CHECK(c.constraints[1] == Constraint::compare(CmpOp::Le, std::int64_t{3}, x));
  CHECK(c.constraints[2] == Constraint::compare(CmpOp::Lt, std::int64_t{5}, t));
}

TEST_CASE("misuse is diagnosed") {
  auto fails_with = [](const std::string& body, const std::string& needle) {
    const auto r = parse_problem(std::string(kTypes) + body);
    CAPTURE(body);
    CAPTURE(messages(r));
    CHECK_FALSE(r.ok());
    CHECK(mentions(r, needle));
  };
  fails_with("action Go(Truck r) { loc(r) == L0; };", "needs a temporal annotation");
  fails_with("loc(R1) == L0;", "needs a temporal annotation");
  fails_with("goal { [5] loc(R1) := L0; };", "goals cannot contain effects");
  fails_with("goal { [all] loc(R1) == L0; };", "[all] is only meaningful inside an action");
  fails_with("action Go(Truck r, Loc l) { r != l; };", "cannot compare Truck with Loc");
  fails_with("action Go(Loc a, Loc b) { a < b; };", "objects can only be compared with == and !=");
  fails_with("type Loc = {X};", "already declared");
  fails_with("type Extra = {L0};", "already declared");
  fails_with("action Go(Truck r) { duration := 1; duration := 2; };", "duration given twice");
  fails_with("action Go(Truck r) { [t] loc(r) == L0; };", "'t' is not a timepoint");
  fails_with("type Bad = [3, 1];", "empty integer range");
  fails_with("fluent Loc pos(Nothing n);", "unknown type 'Nothing'");
}

TEST_CASE("integer-valued fluents") {
  const Problem p = parse_or_throw(R"(
type Level = [0, 3];
fluent Level charge;
charge := 2;
goal { [4] charge == 3; };
)");
  const auto c = p.initial.find_label("Level#3");
  REQUIRE(c);
  CHECK(p.initial.variable(*c).value == 3);
  const auto r = parse_problem("type Level = [0, 3];\nfluent Level charge;\ncharge := 7;\n");
  CHECK(mentions(r, "7 is outside type Level"));
}

TEST_CASE("JSON round trip") {
  for (const auto* file : {"data/truck.anml", "data/rovers_like.anml"}) {
    CAPTURE(file);
    const Problem p = parse_or_throw(lcp::testing::read_text(lcp::testing::source_path(file)));
    const auto j = problem_to_json(p);
    const Problem back = problem_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back == p);
    CHECK(problem_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("canonical JSON layout") {
  const auto j = problem_to_json(lcp::testing::truck());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"types", "fluents", "initial", "templates"});
  CHECK(j["templates"][0]["name"] == "Go");
  CHECK(j["templates"][0]["parameters"] == nlohmann::ordered_json::parse("[0, 1, 2]"));
  CHECK(j["types"][1]["members"] == nlohmann::ordered_json::parse(R"(["L0", "L1", "L2", "L3"])"));

  const auto empty = problem_to_json(Problem{});
  CHECK(empty["types"].empty());
  CHECK(empty["fluents"].empty());
  CHECK(empty["templates"].empty());
  CHECK(empty["initial"]["variables"].empty());
}

TEST_CASE("the parser is total") {
  // Token soup drawn from the grammar's vocabulary: every input gives either
  // a problem or diagnostics, never both, never a crash.
  const std::vector<std::string> vocabulary = {
      "type", "A", "=", "{", "}", "a", ",", ";", "fluent", "f", "(", ")", "action", "Go", "[", "]",
      "start", "end", "all", ":=", "==", "!=", "<", "duration", "in", ":", "1", "-", "+", "goal",
      "timepoint", "t", "boolean", "true", "instance", "//", "\n", "9999999999999999999999", "#"};
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::string text = "type A = {a}; fluent A f; ";
    const int n = std::uniform_int_distribution<int>(0, 25)(rng);
    for (int w = 0; w < n; ++w)
      text += vocabulary[std::uniform_int_distribution<std::size_t>(0, vocabulary.size() - 1)(rng)] + " ";
    const auto r = parse_problem(text);
    CAPTURE(text);
    CHECK(r.problem.has_value() != !r.diagnostics.empty());
  }
}
