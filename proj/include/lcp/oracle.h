#pragma once

#include <cstdint>
#include <variant>

#include "lcp/model.h"
#include "lcp/plan.h"

namespace lcp {

struct OracleConfig {
  /// Every timepoint ranges over [0, horizon]. Unsat within the horizon does
  /// not prove unsat without it.
  std::int64_t horizon = 10;
  /// Maximum number of complete assignments the enumeration may visit.
  std::uint64_t cap = 10'000'000;
};

struct OracleSat {
  Plan witness;
};
struct OracleUnsat {};
struct BudgetExceeded {
  std::uint64_t needed = 0;
};

using OracleResult = std::variant<OracleSat, OracleUnsat, BudgetExceeded>;

/// Decides Π_k by exhaustive enumeration of presence, variable values and
/// timepoints within the horizon, checking each candidate with the
/// validator's ground checks. Shares nothing with the encoder.
OracleResult brute_force_sat(const Problem& p, int k, const OracleConfig& cfg = {});

}  // namespace lcp
