#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcp/bounded.h"
#include "lcp/expr.h"

namespace lcp {

/// Index of a declared variable in a Formula.
struct FVar {
  std::uint32_t index = 0;
  auto operator<=>(const FVar&) const = default;
};

using Term = Expr<FVar>;

enum class Sort { Bool, Int };

struct SortedVar {
  std::string name;
  Sort sort = Sort::Int;
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
};

enum class Tag { Domain, Coherence, Support, Consistency, Symmetry, Pinned };

const char* to_string(Tag tag);

struct Assertion {
  Term term;
  Tag tag = Tag::Domain;
  std::string source;  // ids of the tokens/chronicles/variables it came from
};

/// The compiled CSP: declared variables and the assertions over them.
struct Formula {
  std::vector<SortedVar> variables;
  std::vector<Assertion> assertions;

  FVar declare(SortedVar var);
  std::optional<FVar> find(const std::string& name) const;
  const SortedVar& variable(FVar v) const { return variables.at(v.index); }
  std::size_t count(Tag tag) const;
  /// Appends unless the term is the constant true.
  void add(Term term, Tag tag, std::string source);

 private:
  std::unordered_map<std::string, std::uint32_t> by_name_;
};

struct EncodeOptions {
  bool symmetry = true;
  /// Statically discharge coherence/support between distinct fluent symbols.
  bool pruning = true;
  /// Upper bound imposed on every timepoint (used to compare against bounded enumeration).
  std::optional<std::int64_t> horizon;
};

/// Compiles one bounded problem. The constructor declares every variable
/// (non-constant chronicle variables, presence booleans of action
/// chronicles, persistence timepoints); the constraint builders then return
/// terms over those declarations.
class Encoder {
 public:
  explicit Encoder(const BoundedProblem& bp, EncodeOptions options = {});

  const std::vector<ConditionToken>& conditions() const { return conditions_; }
  const std::vector<EffectToken>& effects() const { return effects_; }

  /// (o ∧ o') ⟹ t ≤ s' ∨ t' ≤ s ∨ p1 ≠ p1' ∨ … ∨ pn ≠ pn'
  Term coherent(const EffectToken& a, const EffectToken& b) const;
  /// o' ∧ e' ≤ s ∧ e ≤ t' ∧ p1 = p1' ∧ … ∧ pn = pn' ∧ v = v'
  Term supported_by(const ConditionToken& c, const EffectToken& e) const;
  /// present(c) ⟹ ⋁ supported_by(c, e), constant-false disjuncts dropped.
  Term supported(const ConditionToken& c, std::span<const EffectToken> effects) const;
  /// present(c) ⟹ (X ∧ interval orderings ∧ persistence bounds).
  Term consistent(std::size_t chronicle) const;
  /// Presence chains and start orderings between consecutive instances.
  std::vector<Term> symmetry_constraints() const;

  Term presence(std::size_t chronicle) const;
  /// A constant variable becomes its literal value.
  Operand<FVar> operand(std::size_t chronicle, VarIndex v) const;
  FVar persistence(const EffectToken& e) const;

  /// Declarations plus every assertion family.
  Formula encode() &&;
  const Formula& formula() const { return formula_; }

 private:
  Term fluent_atom(CmpOp op, const StateVariableRef& a, const StateVariableRef& b) const;

  const BoundedProblem& bp_;
  EncodeOptions options_;
  Formula formula_;
  std::vector<ConditionToken> conditions_;
  std::vector<EffectToken> effects_;
  std::vector<std::vector<std::optional<FVar>>> vars_;  // [chronicle][variable]
  std::vector<std::optional<FVar>> presence_;
};

Formula encode(const BoundedProblem& bp, const EncodeOptions& options = {});

}  // namespace lcp
