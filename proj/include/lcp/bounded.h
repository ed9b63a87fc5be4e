#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lcp/model.h"

namespace lcp {

/// Boolean deciding whether a chronicle is part of the plan.
struct PresenceVar {
  std::string id;
  std::size_t owner = 0;
  bool constant_true = false;
};

/// The initial chronicle plus `depth` optional instances of every template.
///
/// Holds a non-owning pointer to the source problem, which must outlive it.
struct BoundedProblem {
  const Problem* problem = nullptr;
  int depth = 0;
  std::vector<Chronicle> chronicles;   // chronicles[0] is the initial chronicle
  std::vector<PresenceVar> presence;   // parallel to chronicles
  // instances[a][i] is the position in `chronicles` of instance i+1 of template a.
  std::vector<std::vector<std::size_t>> instances;

  const Chronicle& chronicle(std::size_t i) const { return chronicles.at(i); }
  std::size_t size() const { return chronicles.size(); }
};

BoundedProblem gen_problem(const Problem& p, int k);
/// The result keeps a pointer to the problem.
BoundedProblem gen_problem(Problem&&, int) = delete;

/// Fields alias the owner's chronicle-local variables.
struct ConditionToken {
  std::size_t owner = 0;
  std::size_t index = 0;  // position in the owner's condition list
  VarIndex start;
  VarIndex end;
  StateVariableRef sv;
  VarIndex value;
};

struct EffectToken {
  std::size_t owner = 0;
  std::size_t index = 0;
  VarIndex start;
  VarIndex end;
  std::string persistence;  // fresh timepoint, e <= persistence
  StateVariableRef sv;
  VarIndex value;
};

/// One token per condition, in chronicle order then declaration order.
std::vector<ConditionToken> condition_tokens(const BoundedProblem& bp);

/// One token per effect with a fresh persistence timepoint
/// `<chronicle>.eff<i>.t`, ordered like condition_tokens.
std::vector<EffectToken> effect_tokens(const BoundedProblem& bp);

}  // namespace lcp
