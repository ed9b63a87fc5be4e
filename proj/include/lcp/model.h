#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcp/expr.h"

namespace lcp {

/// Raised on structurally ill-formed input to model operations.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TypeId {
  std::uint32_t value = 0;
  auto operator<=>(const TypeId&) const = default;
};

/// Every problem carries these two builtin types at fixed positions.
inline constexpr TypeId kTimeType{0};
inline constexpr TypeId kBoolType{1};

enum class TypeKind { Objects, IntRange, Time };

const char* to_string(TypeKind kind);

/// A set of values. Objects are addressed by their ordinal 0..m-1,
/// integer ranges by their own value, time by any non-negative integer.
struct TypeDef {
  std::string name;
  TypeKind kind = TypeKind::Objects;
  std::vector<std::string> members;
  std::int64_t lower = 0;
  std::int64_t upper = 0;

  bool operator==(const TypeDef&) const = default;

  /// Inclusive bounds of the encoded value; time has no upper bound.
  std::int64_t min_value() const;
  std::optional<std::int64_t> max_value() const;
  bool contains(std::int64_t value) const;
  std::optional<std::int64_t> ordinal(std::string_view member) const;
  /// Object name for enumerations, decimal integer otherwise.
  std::string render(std::int64_t value) const;
};

/// Index of a variable inside its owning chronicle.
struct VarIndex {
  std::uint32_t value = 0;
  auto operator<=>(const VarIndex&) const = default;
};

struct Variable {
  std::string id;     // unique within a (bounded) problem
  std::string label;  // name as written in the source
  TypeId type;
  std::optional<std::int64_t> value;  // pre-bound constant

  bool operator==(const Variable&) const = default;
  bool is_constant() const { return value.has_value(); }
};

struct FluentId {
  std::uint32_t value = 0;
  auto operator<=>(const FluentId&) const = default;
};

struct FluentSignature {
  std::string name;
  std::vector<TypeId> params;
  TypeId value_type;

  bool operator==(const FluentSignature&) const = default;
};

struct StateVariableRef {
  FluentId fluent;
  std::vector<VarIndex> params;

  bool operator==(const StateVariableRef&) const = default;
};

/// `[start, end] sv == value`
struct Condition {
  VarIndex start;
  VarIndex end;
  StateVariableRef sv;
  VarIndex value;

  bool operator==(const Condition&) const = default;
};

/// `[start, end] sv := value`: sv is undefined over ]start, end[ and holds
/// `value` from `end` on.
struct Effect {
  VarIndex start;
  VarIndex end;
  StateVariableRef sv;
  VarIndex value;

  bool operator==(const Effect&) const = default;
};

using Constraint = Expr<VarIndex>;

struct Chronicle {
  std::string id;
  std::vector<Variable> variables;
  std::vector<Constraint> constraints;
  std::vector<Condition> conditions;
  std::vector<Effect> effects;
  // Designated timepoints, set for action chronicles only.
  std::optional<VarIndex> start;
  std::optional<VarIndex> end;
  // Empty for the initial chronicle.
  std::string template_name;
  int instance = 0;

  bool operator==(const Chronicle&) const = default;

  bool is_initial() const { return template_name.empty(); }
  const Variable& variable(VarIndex v) const { return variables.at(v.value); }
  VarIndex add_variable(Variable var);
  std::optional<VarIndex> find_label(std::string_view label) const;
};

/// A chronicle schema; its variables are placeholders renamed on instantiation.
struct ActionTemplate {
  std::string name;
  std::vector<VarIndex> parameters;
  Chronicle body;

  bool operator==(const ActionTemplate&) const = default;
};

struct Problem {
  std::vector<TypeDef> types;
  std::vector<FluentSignature> fluents;
  Chronicle initial;
  std::vector<ActionTemplate> templates;

  /// Seeds the builtin `time` and `boolean` types and an empty initial chronicle.
  Problem();

  bool operator==(const Problem&) const = default;

  const TypeDef& type(TypeId t) const { return types.at(t.value); }
  const FluentSignature& fluent(FluentId f) const { return fluents.at(f.value); }
  std::optional<TypeId> find_type(std::string_view name) const;
  std::optional<FluentId> find_fluent(std::string_view name) const;
  const ActionTemplate* find_template(std::string_view name) const;
  TypeId add_type(TypeDef def);
};

inline constexpr std::string_view kInitialChronicleId = "init";

struct Diagnostic {
  std::string chronicle;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

/// Well-formedness of a single chronicle against the problem's types and
/// fluents. Empty iff every structural invariant holds.
std::vector<Diagnostic> validate_chronicle(const Chronicle& c, const Problem& p);

/// Checks name uniqueness, type invariants, the initial chronicle and every
/// template body.
std::vector<Diagnostic> validate_problem(const Problem& p);

/// Fresh copy of `a` with every variable renamed `<name>_<index>.<label>`.
/// Throws ModelError when index < 1 or the template is ill-formed.
Chronicle instantiate_template(const ActionTemplate& a, int index, const Problem& p);

/// Identifier of the chronicle produced by instantiate_template(a, index).
std::string instance_id(std::string_view template_name, int index);

/// Appends `count` fresh objects, mentioned nowhere, to every user-declared
/// object type.
void inject_objects(Problem& p, int count);

}  // namespace lcp
