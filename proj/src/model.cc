#include "lcp/model.h"

#include <algorithm>
#include <set>

namespace lcp {

const char* to_string(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
    case CmpOp::Le: return "<=";
    case CmpOp::Lt: return "<";
  }
  return "?";
}

std::string smt_integer(std::int64_t value) {
  if (value < 0) return "(- " + std::to_string(-value) + ")";
  return std::to_string(value);
}

const char* to_string(TypeKind kind) {
  switch (kind) {
    case TypeKind::Objects: return "objects";
    case TypeKind::IntRange: return "int";
    case TypeKind::Time: return "time";
  }
  return "?";
}

std::int64_t TypeDef::min_value() const {
  return kind == TypeKind::IntRange ? lower : 0;
}

std::optional<std::int64_t> TypeDef::max_value() const {
  switch (kind) {
    case TypeKind::Objects: return static_cast<std::int64_t>(members.size()) - 1;
    case TypeKind::IntRange: return upper;
    case TypeKind::Time: return std::nullopt;
  }
  return std::nullopt;
}

bool TypeDef::contains(std::int64_t value) const {
  if (value < min_value()) return false;
  const auto hi = max_value();
  return !hi || value <= *hi;
}

std::optional<std::int64_t> TypeDef::ordinal(std::string_view member) const {
  const auto it = std::find(members.begin(), members.end(), member);
  if (it == members.end()) return std::nullopt;
  return static_cast<std::int64_t>(it - members.begin());
}

std::string TypeDef::render(std::int64_t value) const {
  if (kind == TypeKind::Objects && value >= 0 && value < static_cast<std::int64_t>(members.size()))
    return members[static_cast<std::size_t>(value)];
  return std::to_string(value);
}

VarIndex Chronicle::add_variable(Variable var) {
  variables.push_back(std::move(var));
  return VarIndex{static_cast<std::uint32_t>(variables.size() - 1)};
}

std::optional<VarIndex> Chronicle::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i].label == label) return VarIndex{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

Problem::Problem() {
  types.push_back(TypeDef{"time", TypeKind::Time, {}, 0, 0});
  types.push_back(TypeDef{"boolean", TypeKind::Objects, {"false", "true"}, 0, 0});
  initial.id = std::string(kInitialChronicleId);
}

std::optional<TypeId> Problem::find_type(std::string_view name) const {
  for (std::size_t i = 0; i < types.size(); ++i)
    if (types[i].name == name) return TypeId{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

std::optional<FluentId> Problem::find_fluent(std::string_view name) const {
  for (std::size_t i = 0; i < fluents.size(); ++i)
    if (fluents[i].name == name) return FluentId{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

const ActionTemplate* Problem::find_template(std::string_view name) const {
  for (const auto& t : templates)
    if (t.name == name) return &t;
  return nullptr;
}

TypeId Problem::add_type(TypeDef def) {
  types.push_back(std::move(def));
  return TypeId{static_cast<std::uint32_t>(types.size() - 1)};
}

namespace {

class ChronicleChecker {
 public:
  ChronicleChecker(const Chronicle& c, const Problem& p) : c_(c), p_(p) {}

  std::vector<Diagnostic> run() {
    check_variables();
    for (std::size_t i = 0; i < c_.constraints.size(); ++i)
      check_expr(c_.constraints[i], "constraint " + std::to_string(i));
    for (std::size_t i = 0; i < c_.conditions.size(); ++i) {
      const auto& cond = c_.conditions[i];
      check_assertion(cond.start, cond.end, cond.sv, cond.value, "condition " + std::to_string(i));
    }
    for (std::size_t i = 0; i < c_.effects.size(); ++i) {
      const auto& eff = c_.effects[i];
      check_assertion(eff.start, eff.end, eff.sv, eff.value, "effect " + std::to_string(i));
    }
    if (!c_.is_initial()) {
      if (!c_.start || !c_.end) {
        report("action chronicle lacks a designated start or end timepoint");
      } else {
        check_timepoint(*c_.start, "start");
        check_timepoint(*c_.end, "end");
      }
    }
    return std::move(out_);
  }

 private:
  void report(std::string message) { out_.push_back({c_.id, std::move(message)}); }

  bool bound(VarIndex v, const std::string& where) {
    if (v.value < c_.variables.size()) return true;
    report("unbound variable #" + std::to_string(v.value) + " in " + where);
    return false;
  }

  const TypeDef* type_of(VarIndex v) const {
    const auto t = c_.variables[v.value].type;
    return t.value < p_.types.size() ? &p_.types[t.value] : nullptr;
  }

  void check_variables() {
    std::set<std::string> ids;
    for (const auto& var : c_.variables) {
      if (!ids.insert(var.id).second) report("duplicate variable id '" + var.id + "'");
      if (var.type.value >= p_.types.size()) {
        report("variable '" + var.id + "' has an unknown type");
        continue;
      }
      if (var.value && !p_.type(var.type).contains(*var.value))
        report("constant '" + var.id + "' is outside the domain of " + p_.type(var.type).name);
    }
  }

  void check_timepoint(VarIndex v, const std::string& where) {
    if (!bound(v, where)) return;
    const auto* t = type_of(v);
    if (t && t->kind != TypeKind::Time)
      report(where + ": '" + c_.variable(v).id + "' is not a timepoint");
  }

  void check_assertion(VarIndex start, VarIndex end, const StateVariableRef& sv, VarIndex value,
                       const std::string& where) {
    check_timepoint(start, where);
    check_timepoint(end, where);
    if (sv.fluent.value >= p_.fluents.size()) {
      report(where + ": unknown fluent");
      return;
    }
    const auto& f = p_.fluent(sv.fluent);
    if (sv.params.size() != f.params.size()) {
      report(where + ": " + f.name + " expects " + std::to_string(f.params.size()) +
             " arguments, got " + std::to_string(sv.params.size()));
      return;
    }
    for (std::size_t i = 0; i < sv.params.size(); ++i) {
      if (!bound(sv.params[i], where)) continue;
      if (c_.variable(sv.params[i]).type != f.params[i])
        report(where + ": argument " + std::to_string(i + 1) + " of " + f.name + " has the wrong type");
    }
    if (bound(value, where) && c_.variable(value).type != f.value_type)
      report(where + ": value of " + f.name + " has the wrong type");
  }

  static bool numeric(const TypeDef* t) {
    return t && (t->kind == TypeKind::Time || t->kind == TypeKind::IntRange);
  }

  void check_expr(const Constraint& e, const std::string& where) {
    switch (e.kind) {
      case ExprKind::True:
      case ExprKind::False: return;
      case ExprKind::Var: report(where + ": boolean leaves are not allowed in chronicle constraints"); return;
      case ExprKind::Cmp: check_atom(e, where); return;
      default:
        for (const auto& a : e.args) check_expr(a, where);
    }
  }

  void check_atom(const Constraint& e, const std::string& where) {
    const auto* l = std::get_if<VarIndex>(&e.lhs);
    const auto* r = std::get_if<VarIndex>(&e.rhs);
    if ((l && !bound(*l, where)) || (r && !bound(*r, where))) return;
    const TypeDef* lt = l ? type_of(*l) : nullptr;
    const TypeDef* rt = r ? type_of(*r) : nullptr;
    const bool ordering = e.op == CmpOp::Le || e.op == CmpOp::Lt;
    if (l && r && c_.variable(*l).type != c_.variable(*r).type) {
      report(where + ": comparison between different types");
      return;
    }
    for (const TypeDef* t : {lt, rt}) {
      if (!t) continue;
      if (ordering && !numeric(t)) report(where + ": ordering on non-numeric type " + t->name);
      else if (e.offset != 0 && !numeric(t)) report(where + ": offset on non-numeric type " + t->name);
      else if ((!l || !r) && !numeric(t)) report(where + ": literal compared with object type " + t->name);
    }
  }

  const Chronicle& c_;
  const Problem& p_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate_chronicle(const Chronicle& c, const Problem& p) {
  return ChronicleChecker(c, p).run();
}

std::vector<Diagnostic> validate_problem(const Problem& p) {
  std::vector<Diagnostic> out;
  std::set<std::string> names;
  auto unique = [&](const std::string& name, const char* what) {
    if (!names.insert(name).second) out.push_back({"", std::string("duplicate ") + what + " name '" + name + "'"});
  };
  for (const auto& t : p.types) {
    unique(t.name, "type");
    if (t.kind == TypeKind::Objects) {
      if (t.members.empty()) out.push_back({"", "type " + t.name + " has no members"});
      const std::set<std::string> distinct(t.members.begin(), t.members.end());
      if (distinct.size() != t.members.size()) out.push_back({"", "type " + t.name + " has duplicate members"});
    }
    if (t.kind == TypeKind::IntRange && t.lower > t.upper)
      out.push_back({"", "type " + t.name + " has an empty range"});
  }
  for (const auto& f : p.fluents) {
    unique(f.name, "fluent");
    for (const auto t : f.params)
      if (t.value >= p.types.size()) out.push_back({"", "fluent " + f.name + " has a parameter of unknown type"});
    if (f.value_type.value >= p.types.size()) out.push_back({"", "fluent " + f.name + " has an unknown value type"});
  }
  for (const auto& a : p.templates) unique(a.name, "action");
  if (!p.initial.is_initial()) out.push_back({p.initial.id, "initial chronicle carries a template origin"});
  for (auto& d : validate_chronicle(p.initial, p)) out.push_back(std::move(d));
  for (const auto& a : p.templates) {
    if (a.body.is_initial()) out.push_back({a.body.id, "template body lacks its template origin"});
    for (auto& d : validate_chronicle(a.body, p)) out.push_back(std::move(d));
    for (const auto v : a.parameters)
      if (v.value >= a.body.variables.size()) out.push_back({a.body.id, "unbound parameter"});
  }
  return out;
}

std::string instance_id(std::string_view template_name, int index) {
  return std::string(template_name) + "_" + std::to_string(index);
}

Chronicle instantiate_template(const ActionTemplate& a, int index, const Problem& p) {
  if (index < 1) throw ModelError("instance index must be >= 1, got " + std::to_string(index));
  const auto diagnostics = validate_chronicle(a.body, p);
  if (!diagnostics.empty())
    throw ModelError("ill-formed template " + a.name + ": " + diagnostics.front().message);
  Chronicle c = a.body;
  c.id = instance_id(a.name, index);
  c.template_name = a.name;
  c.instance = index;
  for (auto& v : c.variables) v.id = c.id + "." + v.label;
  return c;
}

void inject_objects(Problem& p, int count) {
  for (std::size_t t = 0; t < p.types.size(); ++t) {
    TypeDef& def = p.types[t];
    if (t == kBoolType.value || def.kind != TypeKind::Objects) continue;
    for (int i = 0, serial = 0; i < count; ++serial) {
      const std::string name = def.name + "_extra" + std::to_string(serial);
      if (def.ordinal(name)) continue;
      def.members.push_back(name);
      ++i;
    }
  }
}

}  // namespace lcp
