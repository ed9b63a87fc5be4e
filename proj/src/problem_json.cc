#include "lcp/problem_json.h"

#include <map>

namespace lcp {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::uint32_t kBuiltinTypes = 2;

const char* kind_name(TypeKind k) {
  switch (k) {
    case TypeKind::Objects: return "objects";
    case TypeKind::IntRange: return "range";
    case TypeKind::Time: return "time";
  }
  return "?";
}

TypeKind kind_from(const std::string& s) {
  if (s == "objects") return TypeKind::Objects;
  if (s == "range") return TypeKind::IntRange;
  throw ModelError("unknown type kind '" + s + "'");
}

const std::map<ExprKind, std::string>& expr_names() {
  static const std::map<ExprKind, std::string> names = {
      {ExprKind::True, "true"}, {ExprKind::False, "false"}, {ExprKind::Var, "var"},    {ExprKind::Cmp, "cmp"},
      {ExprKind::Not, "not"},   {ExprKind::And, "and"},     {ExprKind::Or, "or"},      {ExprKind::Implies, "implies"}};
  return names;
}

const std::map<CmpOp, std::string>& cmp_names() {
  static const std::map<CmpOp, std::string> names = {
      {CmpOp::Eq, "=="}, {CmpOp::Ne, "!="}, {CmpOp::Le, "<="}, {CmpOp::Lt, "<"}};
  return names;
}

template <class K>
K lookup(const std::map<K, std::string>& names, const std::string& s) {
  for (const auto& [k, v] : names)
    if (v == s) return k;
  throw ModelError("unknown operator '" + s + "'");
}

ordered_json operand_to_json(const Operand<VarIndex>& o) {
  if (const auto* v = std::get_if<VarIndex>(&o)) return ordered_json{{"var", v->value}};
  return std::get<std::int64_t>(o);
}

Operand<VarIndex> operand_from_json(const json& j) {
  if (j.is_object()) return VarIndex{j.at("var").get<std::uint32_t>()};
  return j.get<std::int64_t>();
}

ordered_json expr_to_json(const Constraint& e) {
  ordered_json j;
  j["op"] = expr_names().at(e.kind);
  switch (e.kind) {
    case ExprKind::True:
    case ExprKind::False: break;
    case ExprKind::Var: j["var"] = e.var.value; break;
    case ExprKind::Cmp:
      j["cmp"] = cmp_names().at(e.op);
      j["lhs"] = operand_to_json(e.lhs);
      j["rhs"] = operand_to_json(e.rhs);
      j["offset"] = e.offset;
      break;
    default:
      j["args"] = ordered_json::array();
      for (const auto& a : e.args) j["args"].push_back(expr_to_json(a));
  }
  return j;
}

// Builds the node as stored, without the folding done by the builders.
Constraint expr_from_json(const json& j) {
  Constraint e;
  e.kind = lookup(expr_names(), j.at("op").get<std::string>());
  if (e.kind == ExprKind::Var) e.var = VarIndex{j.at("var").get<std::uint32_t>()};
  if (e.kind == ExprKind::Cmp) {
    e.op = lookup(cmp_names(), j.at("cmp").get<std::string>());
    e.lhs = operand_from_json(j.at("lhs"));
    e.rhs = operand_from_json(j.at("rhs"));
    e.offset = j.at("offset").get<std::int64_t>();
  }
  if (j.contains("args"))
    for (const auto& a : j.at("args")) e.args.push_back(expr_from_json(a));
  return e;
}

ordered_json token_to_json(VarIndex s, VarIndex e, const StateVariableRef& sv, VarIndex v) {
  ordered_json j;
  j["start"] = s.value;
  j["end"] = e.value;
  j["fluent"] = sv.fluent.value;
  j["params"] = ordered_json::array();
  for (const auto p : sv.params) j["params"].push_back(p.value);
  j["value"] = v.value;
  return j;
}

template <class Token>
Token token_from_json(const json& j) {
  Token t;
  t.start = VarIndex{j.at("start").get<std::uint32_t>()};
  t.end = VarIndex{j.at("end").get<std::uint32_t>()};
  t.sv.fluent = FluentId{j.at("fluent").get<std::uint32_t>()};
  for (const auto& p : j.at("params")) t.sv.params.push_back(VarIndex{p.get<std::uint32_t>()});
  t.value = VarIndex{j.at("value").get<std::uint32_t>()};
  return t;
}

ordered_json chronicle_to_json(const Chronicle& c, const Problem& p) {
  ordered_json j;
  j["id"] = c.id;
  j["variables"] = ordered_json::array();
  for (const auto& v : c.variables) {
    ordered_json var;
    var["id"] = v.id;
    var["label"] = v.label;
    var["type"] = p.type(v.type).name;
    if (v.value) var["value"] = *v.value;
    j["variables"].push_back(std::move(var));
  }
  j["constraints"] = ordered_json::array();
  for (const auto& x : c.constraints) j["constraints"].push_back(expr_to_json(x));
  j["conditions"] = ordered_json::array();
  for (const auto& x : c.conditions) j["conditions"].push_back(token_to_json(x.start, x.end, x.sv, x.value));
  j["effects"] = ordered_json::array();
  for (const auto& x : c.effects) j["effects"].push_back(token_to_json(x.start, x.end, x.sv, x.value));
  if (c.start) j["start"] = c.start->value;
  if (c.end) j["end"] = c.end->value;
  if (!c.template_name.empty()) {
    j["template"] = c.template_name;
    j["instance"] = c.instance;
  }
  return j;
}

Chronicle chronicle_from_json(const json& j, const Problem& p) {
  Chronicle c;
  c.id = j.at("id").get<std::string>();
  for (const auto& v : j.at("variables")) {
    Variable var;
    var.id = v.at("id").get<std::string>();
    var.label = v.at("label").get<std::string>();
    const auto type = p.find_type(v.at("type").get<std::string>());
    if (!type) throw ModelError("unknown type '" + v.at("type").get<std::string>() + "'");
    var.type = *type;
    if (v.contains("value")) var.value = v.at("value").get<std::int64_t>();
    c.variables.push_back(std::move(var));
  }
  for (const auto& x : j.at("constraints")) c.constraints.push_back(expr_from_json(x));
  for (const auto& x : j.at("conditions")) c.conditions.push_back(token_from_json<Condition>(x));
  for (const auto& x : j.at("effects")) c.effects.push_back(token_from_json<Effect>(x));
  if (j.contains("start")) c.start = VarIndex{j.at("start").get<std::uint32_t>()};
  if (j.contains("end")) c.end = VarIndex{j.at("end").get<std::uint32_t>()};
  if (j.contains("template")) {
    c.template_name = j.at("template").get<std::string>();
    c.instance = j.at("instance").get<int>();
  }
  return c;
}

}  // namespace

ordered_json problem_to_json(const Problem& p) {
  ordered_json j;
  j["types"] = ordered_json::array();
  for (std::uint32_t t = kBuiltinTypes; t < p.types.size(); ++t) {
    const TypeDef& def = p.types[t];
    ordered_json type;
    type["name"] = def.name;
    type["kind"] = kind_name(def.kind);
    if (def.kind == TypeKind::Objects) type["members"] = def.members;
    else type["bounds"] = {def.lower, def.upper};
    j["types"].push_back(std::move(type));
  }
  j["fluents"] = ordered_json::array();
  for (const auto& f : p.fluents) {
    ordered_json fluent;
    fluent["name"] = f.name;
    fluent["params"] = ordered_json::array();
    for (const auto t : f.params) fluent["params"].push_back(p.type(t).name);
    fluent["value"] = p.type(f.value_type).name;
    j["fluents"].push_back(std::move(fluent));
  }
  j["initial"] = chronicle_to_json(p.initial, p);
  j["templates"] = ordered_json::array();
  for (const auto& a : p.templates) {
    ordered_json t;
    t["name"] = a.name;
    t["parameters"] = ordered_json::array();
    for (const auto v : a.parameters) t["parameters"].push_back(v.value);
    t["chronicle"] = chronicle_to_json(a.body, p);
    j["templates"].push_back(std::move(t));
  }
  return j;
}

Problem problem_from_json(const json& j) {
  Problem p;
  for (const auto& t : j.at("types")) {
    TypeDef def;
    def.name = t.at("name").get<std::string>();
    def.kind = kind_from(t.at("kind").get<std::string>());
    if (def.kind == TypeKind::Objects) {
      def.members = t.at("members").get<std::vector<std::string>>();
    } else {
      def.lower = t.at("bounds").at(0).get<std::int64_t>();
      def.upper = t.at("bounds").at(1).get<std::int64_t>();
    }
    p.add_type(std::move(def));
  }
  auto type = [&](const json& name) {
    const auto t = p.find_type(name.get<std::string>());
    if (!t) throw ModelError("unknown type '" + name.get<std::string>() + "'");
    return *t;
  };
  for (const auto& f : j.at("fluents")) {
    FluentSignature sig;
    sig.name = f.at("name").get<std::string>();
    for (const auto& t : f.at("params")) sig.params.push_back(type(t));
    sig.value_type = type(f.at("value"));
    p.fluents.push_back(std::move(sig));
  }
  p.initial = chronicle_from_json(j.at("initial"), p);
  for (const auto& t : j.at("templates")) {
    ActionTemplate a;
    a.name = t.at("name").get<std::string>();
    for (const auto& v : t.at("parameters")) a.parameters.push_back(VarIndex{v.get<std::uint32_t>()});
    a.body = chronicle_from_json(t.at("chronicle"), p);
    p.templates.push_back(std::move(a));
  }
  return p;
}

}  // namespace lcp
