#pragma once

#include <optional>
#include <string>
#include <variant>

#include "lcp/encoder.h"
#include "lcp/smtlib.h"

namespace lcp {

/// Solver invoked when neither the config nor LCP_SOLVER says otherwise.
inline constexpr const char* kDefaultSolverCommand = "z3 -in -smt2";

struct SolverConfig {
  std::string command = default_command();
  double timeout_seconds = 60;   // per call
  double deadline_seconds = 600; // whole lcp() run
  int k_max = 10;

  /// $LCP_SOLVER when set and non-empty, kDefaultSolverCommand otherwise.
  static std::string default_command();
};

struct Unsat {};
struct SolverTimeout {};
struct SolverFailure {
  std::string message;
};

using CheckResult = std::variant<Model, Unsat, SolverTimeout, SolverFailure>;

/// Runs the configured solver on emit_smtlib(f). A sat answer is parsed into
/// a Model that assigns every declared variable: values the solver leaves
/// out are completed with false or the variable's lower bound, and a value
/// outside the declared bounds is reported as a failure.
CheckResult check_smt(const Formula& f, const std::string& command, double timeout_seconds);

/// Interprets raw solver output for `f` (exposed for testing).
CheckResult interpret_solver_output(const Formula& f, const std::string& out);

}  // namespace lcp
