#include <doctest.h>

#include "lcp/process.h"
#include "lcp/smtlib.h"

using namespace lcp;

TEST_CASE("s-expression reader") {
  const auto items = parse_sexprs("sat ; comment\n(a (b |c d|) \"s\")\n");
  REQUIRE(items.size() == 2);
  CHECK(items[0].atom == "sat");
  REQUIRE(items[1].list.size() == 3);
  CHECK(items[1].list[1].list[1].atom == "c d");
  CHECK(items[1].list[2].atom == "\"s\"");

  CHECK_THROWS_AS(parse_sexprs("(a (b)"), SmtParseError);
  CHECK_THROWS_AS(parse_sexprs(")"), SmtParseError);
  CHECK_THROWS_AS(parse_sexprs("|open"), SmtParseError);
}

TEST_CASE("models in define-fun form") {
  const auto items = parse_sexprs(R"((
  (define-fun o_Go_1 () Bool true)
  (define-fun Go_1.start () Int 0)
  (define-fun |init.t| () Int 10)
  (define-fun x () Int (- 3))
))");
  const Model m = parse_model(items.at(0));
  CHECK(m == Model{{"o_Go_1", 1}, {"Go_1.start", 0}, {"init.t", 10}, {"x", -3}});

  // Older z3 releases wrap the list in (model ...).
  CHECK(parse_model(parse_sexprs("(model (define-fun y () Bool false))").at(0)) == Model{{"y", 0}});
}

TEST_CASE("models in get-value form") {
  CHECK(parse_model(parse_sexprs("((a 4) (b (- 12)) (c true))").at(0)) == Model{{"a", 4}, {"b", -12}, {"c", 1}});
  CHECK_THROWS_AS(parse_model(parse_sexprs("((a x))").at(0)), SmtParseError);
}

TEST_CASE("subprocess round trip") {
  const auto r = run_process({"cat"}, "hello\n", std::chrono::seconds(5));
  CHECK(r.status == ProcessResult::Status::Exited);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "hello\n");

  std::string big(1 << 20, 'x');
  CHECK(run_process({"cat"}, big, std::chrono::seconds(10)).out.size() == big.size());

  const auto code = run_process({"sh", "-c", "echo oops >&2; exit 3"}, "", std::chrono::seconds(5));
  CHECK(code.exit_code == 3);
  CHECK(code.err == "oops\n");
}

TEST_CASE("subprocess failures") {
  CHECK(run_process({"/nonexistent/solver"}, "", std::chrono::seconds(1)).status ==
        ProcessResult::Status::SpawnFailed);
  CHECK(run_process({}, "", std::chrono::seconds(1)).status == ProcessResult::Status::SpawnFailed);
  const auto start = std::chrono::steady_clock::now();
  CHECK(run_process({"sleep", "10"}, "", std::chrono::milliseconds(200)).status == ProcessResult::Status::TimedOut);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(5));
}

TEST_CASE("command splitting") {
  CHECK(split_command("z3 -in -smt2") == std::vector<std::string>{"z3", "-in", "-smt2"});
  CHECK(split_command("  'my solver'  \"-a b\"  c") == std::vector<std::string>{"my solver", "-a b", "c"});
  CHECK(split_command("").empty());
}
