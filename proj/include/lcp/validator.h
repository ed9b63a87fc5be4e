#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lcp/model.h"
#include "lcp/plan.h"

namespace lcp {

enum class ViolationKind { CoherenceOverlap, UnsupportedCondition, ConstraintViolation, IllTypedStep };

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

/// A fully instantiated condition or effect.
struct GroundToken {
  FluentId fluent;
  std::vector<std::int64_t> args;
  std::int64_t value = 0;
  std::int64_t start = 0;
  std::int64_t end = 0;
  std::int64_t persistence = 0;  // effects only; reconstructed by the checker
  std::string origin;            // for diagnostics
};

/// Finds, for every condition, a supporting effect (same state variable and
/// value, e' <= s, persistence stretched to e) such that no two effects on
/// the same state variable overlap on ]s, persistence]. Persistence starts
/// at each effect's end and only grows, so the search is exact; it returns
/// false iff no choice of supporters exists. On success the effects'
/// `persistence` fields hold the witness.
bool solve_support(std::span<const GroundToken> conditions, std::span<GroundToken> effects);

/// Same check as solve_support, with one violation per problem found.
void check_tokens(std::span<const GroundToken> conditions, std::span<GroundToken> effects,
                  const Problem& p, std::vector<Violation>& out);

/// A chronicle together with a total assignment of its variables.
struct GroundChronicle {
  const Chronicle* chronicle = nullptr;
  std::vector<std::int64_t> values;
};

/// Internal constraints of a chronicle plus its implicit orderings
/// (start <= end, s <= e for every condition and effect).
std::vector<Constraint> internal_constraints(const Chronicle& c);

/// Appends the ground conditions and effects of `g`.
void ground_tokens(const GroundChronicle& g, std::vector<GroundToken>& conditions,
                   std::vector<GroundToken>& effects);

/// Checks domains, internal constraints, coherence and support of a set of
/// present chronicles directly, without going through the encoding.
ValidationReport check_ground(const Problem& p, std::span<const GroundChronicle> chronicles);

/// Grounds the initial chronicle and every step of `plan` and checks them.
/// Ill-typed plans (unknown actions, wrong arity, values outside their type,
/// missing bindings) are rejected before any semantic check.
ValidationReport validate_plan(const Problem& p, const Plan& plan);

}  // namespace lcp
