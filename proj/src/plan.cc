#include "lcp/plan.h"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace lcp {

namespace {

nlohmann::ordered_json value_to_json(const PlanValue& v) {
  if (v.is_object()) return v.symbol;
  return v.number;
}

PlanValue value_from_json(const nlohmann::json& j) {
  if (j.is_string()) return PlanValue::object(j.get<std::string>());
  return PlanValue::integer(j.get<std::int64_t>());
}

nlohmann::ordered_json bindings_to_json(const std::map<std::string, PlanValue>& bindings) {
  auto out = nlohmann::ordered_json::object();
  for (const auto& [label, value] : bindings) out[label] = value_to_json(value);
  return out;
}

std::map<std::string, PlanValue> bindings_from_json(const nlohmann::json& j) {
  std::map<std::string, PlanValue> out;
  for (const auto& [label, value] : j.items()) out[label] = value_from_json(value);
  return out;
}

}  // namespace

nlohmann::ordered_json plan_to_json(const Plan& plan) {
  nlohmann::ordered_json j;
  j["depth"] = plan.depth;
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& s : plan.steps) {
    nlohmann::ordered_json step;
    step["action"] = s.action;
    if (s.instance > 0) step["instance"] = s.instance;
    step["params"] = nlohmann::ordered_json::array();
    for (const auto& p : s.params) step["params"].push_back(value_to_json(p));
    step["start"] = s.start;
    step["end"] = s.end;
    if (!s.bindings.empty()) step["bindings"] = bindings_to_json(s.bindings);
    j["steps"].push_back(std::move(step));
  }
  j["goal"] = bindings_to_json(plan.goal);
  return j;
}

Plan plan_from_json(const nlohmann::json& j) {
  Plan plan;
  plan.depth = j.value("depth", 0);
  for (const auto& s : j.at("steps")) {
    PlanStep step;
    step.action = s.at("action").get<std::string>();
    step.instance = s.value("instance", 0);
    for (const auto& p : s.at("params")) step.params.push_back(value_from_json(p));
    step.start = s.at("start").get<std::int64_t>();
    step.end = s.at("end").get<std::int64_t>();
    if (s.contains("bindings")) step.bindings = bindings_from_json(s.at("bindings"));
    plan.steps.push_back(std::move(step));
  }
  if (j.contains("goal")) plan.goal = bindings_from_json(j.at("goal"));
  return plan;
}

std::optional<std::int64_t> decode_value(const TypeDef& type, const PlanValue& v) {
  if (type.kind == TypeKind::Objects) {
    if (!v.is_object()) return std::nullopt;
    return type.ordinal(v.symbol);
  }
  if (v.is_object() || !type.contains(v.number)) return std::nullopt;
  return v.number;
}

PlanValue encode_value(const TypeDef& type, std::int64_t value) {
  if (type.kind == TypeKind::Objects) return PlanValue::object(type.render(value));
  return PlanValue::integer(value);
}

Plan assemble_plan(const BoundedProblem& bp, const std::vector<bool>& present,
                   const std::vector<std::vector<std::int64_t>>& values) {
  const Problem& p = *bp.problem;
  auto value_of = [&](std::size_t c, VarIndex v) {
    const Variable& var = bp.chronicle(c).variable(v);
    const std::int64_t value = values.at(c).at(v.value);
    if (!p.type(var.type).contains(value))
      throw ModelError("value " + std::to_string(value) + " of " + var.id + " is outside " + p.type(var.type).name);
    return encode_value(p.type(var.type), value);
  };

  Plan plan;
  plan.depth = bp.depth;
  const Chronicle& initial = bp.chronicle(0);
  for (std::size_t v = 0; v < initial.variables.size(); ++v) {
    if (initial.variables[v].is_constant()) continue;
    plan.goal[initial.variables[v].label] = value_of(0, VarIndex{static_cast<std::uint32_t>(v)});
  }
  for (std::size_t c = 1; c < bp.size(); ++c) {
    if (!present.at(c)) continue;
    const Chronicle& chronicle = bp.chronicle(c);
    const ActionTemplate* a = p.find_template(chronicle.template_name);
    if (!a) throw ModelError("unknown template " + chronicle.template_name);
    PlanStep step;
    step.action = a->name;
    step.instance = chronicle.instance;
    for (const auto param : a->parameters) step.params.push_back(value_of(c, param));
    step.start = value_of(c, *chronicle.start).number;
    step.end = value_of(c, *chronicle.end).number;
    for (std::size_t v = 0; v < chronicle.variables.size(); ++v) {
      const VarIndex idx{static_cast<std::uint32_t>(v)};
      const bool named = idx == *chronicle.start || idx == *chronicle.end ||
                         std::find(a->parameters.begin(), a->parameters.end(), idx) != a->parameters.end();
      if (named || chronicle.variables[v].is_constant()) continue;
      step.bindings[chronicle.variables[v].label] = value_of(c, idx);
    }
    plan.steps.push_back(std::move(step));
  }
  std::stable_sort(plan.steps.begin(), plan.steps.end(), [](const PlanStep& a, const PlanStep& b) {
    return std::tie(a.start, a.action, a.instance) < std::tie(b.start, b.action, b.instance);
  });
  return plan;
}

std::string render_plan(const Plan& plan) {
  std::ostringstream out;
  for (const auto& s : plan.steps) {
    out << s.start << ": " << s.action << "(";
    for (std::size_t i = 0; i < s.params.size(); ++i) out << (i ? ", " : "") << s.params[i].to_string();
    out << ") [" << s.end << "]\n";
  }
  if (!plan.goal.empty()) {
    out << "goal:";
    for (const auto& [label, value] : plan.goal) out << " " << label << "=" << value.to_string();
    out << "\n";
  }
  return out.str();
}

}  // namespace lcp
