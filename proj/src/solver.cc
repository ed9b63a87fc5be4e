#include "lcp/solver.h"

#include <cstdlib>
#include <sstream>

#include "lcp/process.h"

namespace lcp {

std::string SolverConfig::default_command() {
  if (const char* env = std::getenv("LCP_SOLVER"); env && *env) return env;
  return kDefaultSolverCommand;
}

namespace {

std::string first_line(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) return "";
  const auto end = text.find_first_of("\r\n", start);
  return text.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

}  // namespace

CheckResult interpret_solver_output(const Formula& f, const std::string& out) {
  std::vector<SExpr> items;
  try {
    items = parse_sexprs(out);
  } catch (const SmtParseError& e) {
    return SolverFailure{std::string("malformed solver output: ") + e.what()};
  }
  if (items.empty()) return SolverFailure{"solver produced no answer"};
  const SExpr& answer = items.front();
  if (answer.is_atom() && answer.atom == "unsat") return Unsat{};
  if (answer.is_atom() && answer.atom == "unknown") return SolverFailure{"solver answered unknown"};
  if (!answer.is_atom() || answer.atom != "sat") return SolverFailure{"unexpected solver answer: " + first_line(out)};

  Model raw;
  try {
    for (std::size_t i = 1; i < items.size(); ++i) {
      const Model part = parse_model(items[i]);
      raw.insert(part.begin(), part.end());
    }
  } catch (const SmtParseError& e) {
    return SolverFailure{std::string("malformed model: ") + e.what()};
  }

  Model model;
  for (const auto& v : f.variables) {
    const auto it = raw.find(v.name);
    std::int64_t value = 0;
    if (it != raw.end()) value = it->second;
    else if (v.sort == Sort::Int && v.lower) value = *v.lower;
    const bool in_bounds = v.sort == Sort::Bool ? (value == 0 || value == 1)
                                                : (!v.lower || *v.lower <= value) && (!v.upper || value <= *v.upper);
    if (!in_bounds) return SolverFailure{"model value " + std::to_string(value) + " of " + v.name + " is out of bounds"};
    model[v.name] = value;
  }
  return model;
}

CheckResult check_smt(const Formula& f, const std::string& command, double timeout_seconds) {
  const auto argv = split_command(command);
  const auto result = run_process(argv, emit_smtlib(f), std::chrono::duration<double>(timeout_seconds));
  switch (result.status) {
    case ProcessResult::Status::SpawnFailed: return SolverFailure{"cannot start solver: " + result.err};
    case ProcessResult::Status::TimedOut: return SolverTimeout{};
    case ProcessResult::Status::Signaled:
      return SolverFailure{"solver killed by signal " + std::to_string(result.exit_code)};
    case ProcessResult::Status::Exited: break;
  }
  // z3 exits 1 when (get-model) follows unsat, so the answer decides, not the status.
  auto outcome = interpret_solver_output(f, result.out);
  if (auto* failure = std::get_if<SolverFailure>(&outcome); failure && !result.err.empty())
    failure->message += " (stderr: " + first_line(result.err) + ")";
  return outcome;
}

}  // namespace lcp
