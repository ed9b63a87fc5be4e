#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "lcp/bounded.h"
#include "lcp/encoder.h"
#include "lcp/plan.h"
#include "lcp/solver.h"

namespace lcp {

/// Reads the plan encoded by a model of encode(bp). Throws ModelError when
/// a present chronicle holds a value outside its type.
Plan extract_solution(const Model& m, const BoundedProblem& bp);

/// Adds assertions fixing the presence variables and chronicle variables of
/// `f` to the values in `plan`. Steps of one template are mapped to instances
/// 1, 2, ... in order of start time; the rest are pinned absent. Persistence
/// timepoints stay free. Returns false if the plan cannot be expressed in bp
/// (too many steps, unknown labels or values).
bool pin_plan(Formula& f, const BoundedProblem& bp, const Plan& plan);

struct Solution {
  Plan plan;
  int depth = 0;
};
struct Exhausted {
  int k_max = 0;
};
struct TimedOut {
  int depth = 0;
};
struct SolverError {
  int depth = 0;
  std::string message;
};

using SolveOutcome = std::variant<Solution, Exhausted, TimedOut, SolverError>;

struct DepthReport {
  int depth = 0;
  std::size_t variables = 0;
  std::size_t assertions = 0;
  std::string verdict;  // sat, unsat, timeout or error
  double seconds = 0;
};

struct LcpOptions {
  SolverConfig solver;
  EncodeOptions encoding;
  /// When set, each depth's script is written there as depth_<k>.smt2.
  std::optional<std::filesystem::path> emit_dir;
  std::function<void(const DepthReport&)> on_depth;
};

/// Iterative deepening over Π_0 .. Π_{k_max}. Never throws: failures become
/// SolverError outcomes. A returned Solution has passed validate_plan.
SolveOutcome lcp(const Problem& p, const LcpOptions& options);

}  // namespace lcp
