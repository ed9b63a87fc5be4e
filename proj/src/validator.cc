#include "lcp/validator.h"

#include <algorithm>
#include <map>
#include <optional>

namespace lcp {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::CoherenceOverlap: return "coherence-overlap";
    case ViolationKind::UnsupportedCondition: return "unsupported-condition";
    case ViolationKind::ConstraintViolation: return "constraint-violation";
    case ViolationKind::IllTypedStep: return "ill-typed-step";
  }
  return "?";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

namespace {

bool same_state_variable(const GroundToken& a, const GroundToken& b) {
  return a.fluent == b.fluent && a.args == b.args;
}

// Effects hold over ]start, persistence]; two on one state variable must not share a point.
bool overlap(const GroundToken& a, const GroundToken& b) {
  return !(a.persistence <= b.start || b.persistence <= a.start);
}

bool clashes(std::span<const GroundToken> effects, std::size_t i) {
  for (std::size_t j = 0; j < effects.size(); ++j)
    if (j != i && same_state_variable(effects[i], effects[j]) && overlap(effects[i], effects[j])) return true;
  return false;
}

std::vector<std::vector<std::size_t>> candidates_for(std::span<const GroundToken> conditions,
                                                     std::span<const GroundToken> effects) {
  std::vector<std::vector<std::size_t>> out(conditions.size());
  for (std::size_t c = 0; c < conditions.size(); ++c) {
    const auto& cond = conditions[c];
    for (std::size_t e = 0; e < effects.size(); ++e) {
      const auto& eff = effects[e];
      if (same_state_variable(cond, eff) && eff.value == cond.value && eff.end <= cond.start) out[c].push_back(e);
    }
    // Latest establisher first: it is the supporter in every case but simultaneous instants.
    std::stable_sort(out[c].begin(), out[c].end(),
                     [&](std::size_t a, std::size_t b) { return effects[a].end > effects[b].end; });
  }
  return out;
}

class SupportSearch {
 public:
  SupportSearch(std::span<const GroundToken> conditions, std::span<GroundToken> effects,
                std::vector<std::vector<std::size_t>> candidates)
      : conditions_(conditions), effects_(effects), candidates_(std::move(candidates)) {
    for (std::size_t c = 0; c < conditions_.size(); ++c) order_.push_back(c);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return candidates_[a].size() < candidates_[b].size(); });
  }

  bool run() { return assign(0); }

 private:
  bool assign(std::size_t k) {
    if (k == order_.size()) return true;
    const auto& cond = conditions_[order_[k]];
    for (const std::size_t e : candidates_[order_[k]]) {
      GroundToken& eff = effects_[e];
      const std::int64_t saved = eff.persistence;
      eff.persistence = std::max(saved, cond.end);
      if ((eff.persistence == saved || !clashes(effects_, e)) && assign(k + 1)) return true;
      eff.persistence = saved;
    }
    return false;
  }

  std::span<const GroundToken> conditions_;
  std::span<GroundToken> effects_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> order_;
};

std::string describe_sv(const Problem& p, const GroundToken& t) {
  const auto& f = p.fluent(t.fluent);
  std::string out = f.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i)
    out += (i ? ", " : "") + p.type(f.params[i]).render(t.args[i]);
  return out + ")";
}

std::string describe(const Problem& p, const GroundToken& t, bool effect) {
  const auto& f = p.fluent(t.fluent);
  return t.origin + " [" + std::to_string(t.start) + "," + std::to_string(t.end) + "] " + describe_sv(p, t) +
         (effect ? " := " : " == ") + p.type(f.value_type).render(t.value);
}

}  // namespace

bool solve_support(std::span<const GroundToken> conditions, std::span<GroundToken> effects) {
  for (auto& e : effects) e.persistence = e.end;
  for (std::size_t i = 0; i < effects.size(); ++i)
    if (clashes(effects, i)) return false;
  auto candidates = candidates_for(conditions, effects);
  for (const auto& c : candidates)
    if (c.empty()) return false;
  return SupportSearch(conditions, effects, std::move(candidates)).run();
}

void check_tokens(std::span<const GroundToken> conditions, std::span<GroundToken> effects, const Problem& p,
                  std::vector<Violation>& out) {
  const auto before = out.size();
  for (auto& e : effects) e.persistence = e.end;
  for (std::size_t i = 0; i < effects.size(); ++i)
    for (std::size_t j = i + 1; j < effects.size(); ++j)
      if (same_state_variable(effects[i], effects[j]) && overlap(effects[i], effects[j]))
        out.push_back({ViolationKind::CoherenceOverlap,
                       describe(p, effects[i], true) + " overlaps " + describe(p, effects[j], true)});
  const auto candidates = candidates_for(conditions, effects);
  for (std::size_t c = 0; c < conditions.size(); ++c)
    if (candidates[c].empty())
      out.push_back({ViolationKind::UnsupportedCondition, describe(p, conditions[c], false) + " has no supporter"});
  if (out.size() != before || solve_support(conditions, effects)) return;

  // Every condition has a candidate but no combination is coherent: report
  // the clashes of the latest-establisher assignment.
  for (auto& e : effects) e.persistence = e.end;
  std::vector<std::size_t> chosen(conditions.size());
  for (std::size_t c = 0; c < conditions.size(); ++c) {
    chosen[c] = candidates[c].front();
    auto& eff = effects[chosen[c]];
    eff.persistence = std::max(eff.persistence, conditions[c].end);
  }
  for (std::size_t c = 0; c < conditions.size(); ++c) {
    const auto& eff = effects[chosen[c]];
    for (std::size_t j = 0; j < effects.size(); ++j) {
      if (j == chosen[c] || !same_state_variable(eff, effects[j]) || !overlap(eff, effects[j])) continue;
      out.push_back({ViolationKind::CoherenceOverlap, describe(p, conditions[c], false) + " relies on " +
                                                          describe(p, eff, true) + " persisting across " +
                                                          describe(p, effects[j], true)});
    }
  }
  if (out.size() == before)
    out.push_back({ViolationKind::UnsupportedCondition, "no coherent choice of supporters exists"});
}

std::vector<Constraint> internal_constraints(const Chronicle& c) {
  std::vector<Constraint> out = c.constraints;
  auto ordered = [&](VarIndex a, VarIndex b) {
    Constraint x = Constraint::compare(CmpOp::Le, a, b);
    if (a != b && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  };
  if (c.start && c.end) ordered(*c.start, *c.end);
  for (const auto& cond : c.conditions) ordered(cond.start, cond.end);
  for (const auto& eff : c.effects) ordered(eff.start, eff.end);
  return out;
}

void ground_tokens(const GroundChronicle& g, std::vector<GroundToken>& conditions,
                   std::vector<GroundToken>& effects) {
  const Chronicle& c = *g.chronicle;
  auto val = [&](VarIndex v) { return g.values[v.value]; };
  auto make = [&](VarIndex s, VarIndex e, const StateVariableRef& sv, VarIndex value, std::string origin) {
    GroundToken t;
    t.fluent = sv.fluent;
    for (const auto p : sv.params) t.args.push_back(val(p));
    t.value = val(value);
    t.start = val(s);
    t.end = val(e);
    t.persistence = t.end;
    t.origin = std::move(origin);
    return t;
  };
  for (std::size_t i = 0; i < c.conditions.size(); ++i) {
    const auto& x = c.conditions[i];
    conditions.push_back(make(x.start, x.end, x.sv, x.value, c.id + ".cond" + std::to_string(i)));
  }
  for (std::size_t i = 0; i < c.effects.size(); ++i) {
    const auto& x = c.effects[i];
    effects.push_back(make(x.start, x.end, x.sv, x.value, c.id + ".eff" + std::to_string(i)));
  }
}

ValidationReport check_ground(const Problem& p, std::span<const GroundChronicle> chronicles) {
  ValidationReport report;
  std::vector<GroundToken> conditions;
  std::vector<GroundToken> effects;
  for (const auto& g : chronicles) {
    const Chronicle& c = *g.chronicle;
    for (std::size_t v = 0; v < c.variables.size(); ++v) {
      const Variable& var = c.variables[v];
      const std::int64_t value = g.values.at(v);
      if (!p.type(var.type).contains(value) || (var.value && *var.value != value))
        report.violations.push_back({ViolationKind::ConstraintViolation,
                                     c.id + ": " + var.label + " = " + std::to_string(value) + " is outside its domain"});
    }
    auto value_of = [&](const VarIndex& v) { return g.values.at(v.value); };
    auto label_of = [&](const VarIndex& v) -> const std::string& { return c.variable(v).label; };
    for (const auto& x : internal_constraints(c))
      if (!evaluate(x, value_of))
        report.violations.push_back({ViolationKind::ConstraintViolation, c.id + ": " + to_sexpr(x, label_of) + " is violated"});
    ground_tokens(g, conditions, effects);
  }
  check_tokens(conditions, effects, p, report.violations);
  return report;
}

namespace {

// Fills unknown variables from top-level equalities `x = y + c`.
void propagate_equalities(const Chronicle& c, std::vector<std::optional<std::int64_t>>& values) {
  std::vector<const Constraint*> atoms;
  std::vector<const Constraint*> stack;
  for (const auto& x : c.constraints) stack.push_back(&x);
  while (!stack.empty()) {
    const Constraint* x = stack.back();
    stack.pop_back();
    if (x->kind == ExprKind::And)
      for (const auto& a : x->args) stack.push_back(&a);
    else if (x->kind == ExprKind::Cmp && x->op == CmpOp::Eq)
      atoms.push_back(x);
  }
  auto known = [&](const Operand<VarIndex>& o) -> std::optional<std::int64_t> {
    if (const auto* lit = std::get_if<std::int64_t>(&o)) return *lit;
    return values[std::get<VarIndex>(o).value];
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto* x : atoms) {
      const auto l = known(x->lhs);
      const auto r = known(x->rhs);
      if (l && !r && std::holds_alternative<VarIndex>(x->rhs)) {
        values[std::get<VarIndex>(x->rhs).value] = *l - x->offset;
        changed = true;
      } else if (r && !l && std::holds_alternative<VarIndex>(x->lhs)) {
        values[std::get<VarIndex>(x->lhs).value] = *r + x->offset;
        changed = true;
      }
    }
  }
}

}  // namespace

ValidationReport validate_plan(const Problem& p, const Plan& plan) {
  ValidationReport report;
  auto ill_typed = [&](std::string message) {
    report.violations.push_back({ViolationKind::IllTypedStep, std::move(message)});
  };

  std::vector<Chronicle> chronicles;
  std::vector<std::vector<std::optional<std::int64_t>>> partial;

  auto seed = [&](const Chronicle& c) {
    std::vector<std::optional<std::int64_t>> values(c.variables.size());
    for (std::size_t v = 0; v < c.variables.size(); ++v) values[v] = c.variables[v].value;
    return values;
  };
  auto bind = [&](const Chronicle& c, std::vector<std::optional<std::int64_t>>& values, const std::string& label,
                  const PlanValue& value, const std::string& where) {
    const auto v = c.find_label(label);
    if (!v || c.variable(*v).is_constant()) {
      ill_typed(where + ": no variable named '" + label + "'");
      return;
    }
    const auto decoded = decode_value(p.type(c.variable(*v).type), value);
    if (!decoded) {
      ill_typed(where + ": " + value.to_string() + " is not a valid " + p.type(c.variable(*v).type).name);
      return;
    }
    values[v->value] = *decoded;
  };

  chronicles.push_back(p.initial);
  partial.push_back(seed(p.initial));
  for (const auto& [label, value] : plan.goal) bind(p.initial, partial.back(), label, value, "goal");

  std::map<std::string, int> next_instance;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const PlanStep& step = plan.steps[i];
    const std::string where = "step " + std::to_string(i) + " (" + step.action + ")";
    const ActionTemplate* a = p.find_template(step.action);
    if (!a) {
      ill_typed(where + ": unknown action");
      continue;
    }
    if (step.params.size() != a->parameters.size()) {
      ill_typed(where + ": expects " + std::to_string(a->parameters.size()) + " parameters, got " +
                std::to_string(step.params.size()));
      continue;
    }
    Chronicle c = instantiate_template(*a, ++next_instance[a->name], p);
    auto values = seed(c);
    for (std::size_t k = 0; k < step.params.size(); ++k)
      bind(c, values, c.variable(a->parameters[k]).label, step.params[k], where);
    if (step.start < 0 || step.end < 0) ill_typed(where + ": negative time");
    values[c.start->value] = step.start;
    values[c.end->value] = step.end;
    for (const auto& [label, value] : step.bindings) bind(c, values, label, value, where);
    chronicles.push_back(std::move(c));
    partial.push_back(std::move(values));
  }

  std::vector<GroundChronicle> ground;
  for (std::size_t i = 0; i < chronicles.size(); ++i) {
    propagate_equalities(chronicles[i], partial[i]);
    GroundChronicle g{&chronicles[i], {}};
    for (std::size_t v = 0; v < partial[i].size(); ++v) {
      if (!partial[i][v]) {
        ill_typed(chronicles[i].id + ": no value for " + chronicles[i].variables[v].label);
        continue;
      }
      g.values.push_back(*partial[i][v]);
    }
    ground.push_back(std::move(g));
  }
  if (!report.valid()) return report;
  return check_ground(p, ground);
}

}  // namespace lcp
