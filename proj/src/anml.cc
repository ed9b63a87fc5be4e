#include "lcp/anml.h"

#include <charconv>
#include <map>
#include <set>

namespace lcp {

std::string format_diagnostic(const ParseDiagnostic& d) {
  return std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": " +
         (d.severity == Severity::Error ? "error: " : "warning: ") + d.message;
}

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::int64_t value = 0;
  SourceSpan span;
};

struct SyntaxError {
  ParseDiagnostic diagnostic;
};

[[noreturn]] void fail(const SourceSpan& span, std::string message) {
  throw SyntaxError{{Severity::Error, std::move(message), span}};
}

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(std::string_view text) {
  static constexpr std::string_view kPunct[] = {":=", "==", "!=", "<=", ">=", "{", "}", "(", ")", "[",
                                                "]",  ",",  ";",  ":",  "<",  ">", "+", "-", "="};
  std::vector<Token> out;
  std::size_t pos = 0;
  int line = 1;
  std::size_t line_start = 0;
  auto span_at = [&](std::size_t begin, std::size_t end) {
    return SourceSpan{begin, end, line, static_cast<int>(begin - line_start) + 1};
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '\n') {
      ++pos;
      ++line;
      line_start = pos;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++pos;
      continue;
    }
    if (text.substr(pos, 2) == "//") {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }
    Token t;
    const std::size_t begin = pos;
    if (ident_start(c)) {
      while (pos < text.size() && ident_char(text[pos])) ++pos;
      t.kind = Tok::Ident;
    } else if (digit(c)) {
      while (pos < text.size() && digit(text[pos])) ++pos;
      t.kind = Tok::Int;
      const auto [end, ec] = std::from_chars(text.data() + begin, text.data() + pos, t.value);
      if (ec != std::errc{} || end != text.data() + pos) fail(span_at(begin, pos), "integer literal out of range");
    } else {
      for (const auto p : kPunct) {
        if (text.substr(pos, p.size()) == p) {
          pos += p.size();
          t.kind = Tok::Punct;
          break;
        }
      }
      if (t.kind != Tok::Punct) fail(span_at(begin, begin + 1), std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(text.substr(begin, pos - begin));
    t.span = span_at(begin, pos);
    out.push_back(std::move(t));
  }
  Token end;
  end.span = span_at(pos, pos);
  out.push_back(end);
  return out;
}

/// Named variables visible while parsing one chronicle.
struct Scope {
  Chronicle* chronicle = nullptr;
  bool is_action = false;
  std::map<std::string, VarIndex, std::less<>> names;
};

/// A side of a constraint: a variable or a literal, plus an integer offset.
struct Side {
  std::optional<VarIndex> var;
  std::int64_t literal = 0;
  std::int64_t offset = 0;
  SourceSpan span;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    p_.initial.id = std::string(kInitialChronicleId);
    initial_.chronicle = &p_.initial;
    constants_["true"] = {kBoolType, 1};
    constants_["false"] = {kBoolType, 0};
  }

  ParseResult run() {
    try {
      while (peek().kind != Tok::End) declaration();
    } catch (const SyntaxError& e) {
      return {std::nullopt, {e.diagnostic}};
    }
    if (diagnostics_.empty()) {
      for (const auto& d : validate_problem(p_))
        error(SourceSpan{}, (d.chronicle.empty() ? "" : d.chronicle + ": ") + d.message);
    }
    if (!diagnostics_.empty()) return {std::nullopt, std::move(diagnostics_)};
    return {std::move(p_), {}};
  }

 private:
  // ---- tokens ----

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(std::string_view punct, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == punct;
  }
  bool at_word(std::string_view word, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Ident && peek(ahead).text == word;
  }
  Token take() {
    Token t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool accept(std::string_view punct) {
    if (!at(punct)) return false;
    take();
    return true;
  }
  Token expect(std::string_view punct) {
    if (!at(punct)) fail(peek().span, "expected '" + std::string(punct) + "' but found " + describe(peek()));
    return take();
  }
  Token expect_word(std::string_view word) {
    if (!at_word(word)) fail(peek().span, "expected '" + std::string(word) + "' but found " + describe(peek()));
    return take();
  }
  Token expect_ident(std::string_view what) {
    if (peek().kind != Tok::Ident) fail(peek().span, "expected " + std::string(what) + " but found " + describe(peek()));
    return take();
  }
  std::pair<std::int64_t, SourceSpan> expect_int() {
    const SourceSpan span = peek().span;
    const bool negative = accept("-");
    if (peek().kind != Tok::Int) fail(peek().span, "expected an integer but found " + describe(peek()));
    const std::int64_t v = take().value;
    return {negative ? -v : v, span};
  }
  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }

  void error(const SourceSpan& span, std::string message) {
    diagnostics_.push_back({Severity::Error, std::move(message), span});
  }

  // ---- declarations ----

  void declaration() {
    if (at_word("type")) return type_declaration();
    if (at_word("instance")) return instance_declaration();
    if (at_word("fluent") || at_word("function")) return fluent_declaration();
    if (at_word("action")) return action_declaration();
    if (at_word("goal")) return goal_declaration();
    if (at("[") || peek().kind == Tok::Ident) return initial_statement();
    fail(peek().span, "expected a declaration but found " + describe(peek()));
  }

  bool claim_name(const Token& name) {
    if (reserved(name.text)) {
      error(name.span, "'" + name.text + "' is reserved");
      return false;
    }
    if (!names_.insert(name.text).second || constants_.count(name.text)) {
      error(name.span, "'" + name.text + "' is already declared");
      return false;
    }
    return true;
  }

  static bool reserved(std::string_view word) {
    static const std::set<std::string, std::less<>> kReserved = {
        "type", "instance", "fluent", "function", "action", "goal", "duration", "in",
        "start", "end", "all", "boolean", "timepoint", "time", "true", "false"};
    return kReserved.count(word) != 0;
  }

  void add_member(TypeId type, const Token& member) {
    if (reserved(member.text) || names_.count(member.text) || constants_.count(member.text)) {
      error(member.span, "object '" + member.text + "' is already declared");
      return;
    }
    TypeDef& def = p_.types[type.value];
    constants_[member.text] = {type, static_cast<std::int64_t>(def.members.size())};
    def.members.push_back(member.text);
  }

  void type_declaration() {
    take();
    const Token name = expect_ident("a type name");
    const bool fresh = claim_name(name);
    TypeDef def;
    def.name = name.text;
    std::vector<Token> members;
    if (accept("=")) {
      if (accept("{")) {
        if (!at("}")) {
          do members.push_back(expect_ident("an object name"));
          while (accept(","));
        }
        expect("}");
      } else if (accept("[")) {
        def.kind = TypeKind::IntRange;
        const auto [lo, lo_span] = expect_int();
        expect(",");
        const auto [hi, hi_span] = expect_int();
        expect("]");
        def.lower = lo;
        def.upper = hi;
        if (lo > hi) error(hi_span, "empty integer range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
      } else {
        fail(peek().span, "expected '{' or '[' after '=' but found " + describe(peek()));
      }
    }
    expect(";");
    if (!fresh) return;
    const TypeId id = p_.add_type(std::move(def));
    for (const auto& m : members) add_member(id, m);
  }

  void instance_declaration() {
    take();
    const Token type_name = expect_ident("a type name");
    std::vector<Token> members;
    do members.push_back(expect_ident("an object name"));
    while (accept(","));
    expect(";");
    const auto type = p_.find_type(type_name.text);
    if (!type || p_.type(*type).kind != TypeKind::Objects || *type == kBoolType) {
      error(type_name.span, "'" + type_name.text + "' is not an object type");
      return;
    }
    for (const auto& m : members) add_member(*type, m);
  }

  std::optional<TypeId> resolve_type(const Token& name) {
    if (name.text == "boolean") return kBoolType;
    if (name.text == "timepoint") return kTimeType;
    const auto t = p_.find_type(name.text);
    if (!t || *t == kTimeType || *t == kBoolType) {
      error(name.span, "unknown type '" + name.text + "'");
      return std::nullopt;
    }
    return t;
  }

  struct Param {
    Token name;
    std::optional<TypeId> type;
  };

  std::vector<Param> parameter_list() {
    std::vector<Param> out;
    expect("(");
    if (!at(")")) {
      do {
        const Token type = expect_ident("a parameter type");
        const Token name = expect_ident("a parameter name");
        out.push_back({name, resolve_type(type)});
      } while (accept(","));
    }
    expect(")");
    return out;
  }

  void fluent_declaration() {
    take();
    const Token value_type = expect_ident("a value type");
    const Token name = expect_ident("a fluent name");
    std::vector<Param> params;
    if (at("(")) params = parameter_list();
    expect(";");
    FluentSignature f;
    f.name = name.text;
    bool ok = claim_name(name);
    const auto vt = resolve_type(value_type);
    if (vt && *vt == kTimeType) {
      error(value_type.span, "fluents cannot take timepoint values");
      ok = false;
    }
    ok = ok && vt.has_value();
    if (vt) f.value_type = *vt;
    std::set<std::string> seen;
    for (const auto& param : params) {
      if (!seen.insert(param.name.text).second) error(param.name.span, "duplicate parameter '" + param.name.text + "'");
      if (param.type && *param.type == kTimeType) {
        error(param.name.span, "fluent parameters cannot be timepoints");
        ok = false;
      }
      ok = ok && param.type.has_value();
      if (param.type) f.params.push_back(*param.type);
    }
    if (ok) p_.fluents.push_back(std::move(f));
  }

  VarIndex declare(Scope& scope, const Token& name, TypeId type) {
    Chronicle& c = *scope.chronicle;
    if (scope.names.count(name.text) || constants_.count(name.text) || reserved(name.text) ||
        c.find_label(name.text))
      error(name.span, "'" + name.text + "' is already declared");
    const VarIndex v = c.add_variable({c.id + "." + name.text, name.text, type, std::nullopt});
    scope.names[name.text] = v;
    return v;
  }

  void action_declaration() {
    take();
    const Token name = expect_ident("an action name");
    const bool fresh = claim_name(name);
    const auto params = parameter_list();

    ActionTemplate a;
    a.name = name.text;
    a.body.id = name.text;
    a.body.template_name = name.text;
    Scope scope{&a.body, true, {}};
    bool ok = fresh;
    for (const auto& param : params) {
      if (param.type && *param.type == kTimeType) error(param.name.span, "action parameters cannot be timepoints");
      ok = ok && param.type.has_value();
      a.parameters.push_back(declare(scope, param.name, param.type.value_or(kBoolType)));
    }
    a.body.start = a.body.add_variable({a.body.id + ".start", "start", kTimeType, std::nullopt});
    a.body.end = a.body.add_variable({a.body.id + ".end", "end", kTimeType, std::nullopt});
    scope.names["start"] = *a.body.start;
    scope.names["end"] = *a.body.end;

    const std::size_t errors_before = diagnostics_.size();
    expect("{");
    bool has_duration = false;
    while (!accept("}")) {
      if (at_word("duration")) {
        const Token kw = take();
        if (has_duration) error(kw.span, "duration given twice");
        has_duration = true;
        duration(scope);
      } else {
        body_statement(scope);
      }
    }
    accept(";");
    if (ok && diagnostics_.size() == errors_before) p_.templates.push_back(std::move(a));
  }

  void duration(Scope& scope) {
    const Chronicle& c = *scope.chronicle;
    if (accept(":=")) {
      const auto [d, span] = expect_int();
      expect(";");
      if (d < 0) error(span, "negative duration");
      scope.chronicle->constraints.push_back(Constraint::compare(CmpOp::Eq, *c.end, *c.start, d));
      return;
    }
    expect(":");
    expect_word("in");
    expect("[");
    const auto [lo, lo_span] = expect_int();
    expect(",");
    const auto [hi, hi_span] = expect_int();
    expect("]");
    expect(";");
    if (lo < 0 || lo > hi) error(lo_span, "invalid duration interval");
    // start + lo <= end <= start + hi
    scope.chronicle->constraints.push_back(Constraint::all_of({Constraint::compare(CmpOp::Le, *c.start, *c.end, -lo),
                                                               Constraint::compare(CmpOp::Le, *c.end, *c.start, hi)}));
  }

  void goal_declaration() {
    take();
    if (at("(")) {
      for (const auto& param : parameter_list()) declare(initial_, param.name, param.type.value_or(kTimeType));
    }
    expect("{");
    while (!accept("}")) body_statement(initial_, /*goal=*/true);
    accept(";");
  }

  // A statement inside an action or goal block.
  void body_statement(Scope& scope, bool goal = false) {
    if (at("[")) {
      const auto [s, e] = annotation(scope);
      assertion(scope, s, e, goal);
      return;
    }
    if (peek().kind == Tok::Ident && p_.find_fluent(peek().text)) {
      const Token t = peek();
      assertion(scope, std::nullopt, std::nullopt, goal);
      error(t.span, "statement on '" + t.text + "' needs a temporal annotation such as [start]");
      return;
    }
    constraint(scope);
  }

  // Top-level fact: `f(args) := v;` at time 0, or an annotated statement.
  void initial_statement() {
    if (at("[")) {
      const auto [s, e] = annotation(initial_);
      assertion(initial_, s, e, false);
      return;
    }
    const SourceSpan span = peek().span;
    const VarIndex zero = time_constant(initial_, 0);
    if (!assertion(initial_, zero, zero, false, /*effects_only=*/true))
      error(span, "a condition in the initial state needs a temporal annotation");
  }

  using Interval = std::pair<std::optional<VarIndex>, std::optional<VarIndex>>;

  Interval annotation(Scope& scope) {
    expect("[");
    if (at_word("all") && at("]", 1)) {
      const Token all = take();
      take();
      if (!scope.is_action) {
        error(all.span, "[all] is only meaningful inside an action");
        return {std::nullopt, std::nullopt};
      }
      return {scope.chronicle->start, scope.chronicle->end};
    }
    const auto first = time_expression(scope);
    auto second = first;
    if (accept(",")) second = time_expression(scope);
    expect("]");
    return {first, second};
  }

  // `start`, `end`, a named timepoint, or an integer, optionally plus/minus an integer.
  std::optional<VarIndex> time_expression(Scope& scope) {
    if (peek().kind == Tok::Int || at("-")) {
      const auto [v, span] = expect_int();
      if (v < 0) {
        error(span, "negative time " + std::to_string(v));
        return std::nullopt;
      }
      return time_constant(scope, v);
    }
    const Token base = expect_ident("a timepoint");
    std::int64_t offset = 0;
    if (at("+") || at("-")) {
      const bool minus = take().text == "-";
      if (peek().kind != Tok::Int) fail(peek().span, "expected an integer but found " + describe(peek()));
      offset = minus ? -take().value : take().value;
    }
    const auto it = scope.names.find(base.text);
    if (it == scope.names.end() || scope.chronicle->variable(it->second).type != kTimeType) {
      error(base.span, "'" + base.text + "' is not a timepoint");
      return std::nullopt;
    }
    if (offset == 0) return it->second;
    return derived_timepoint(scope, it->second, base.text, offset);
  }

  VarIndex derived_timepoint(Scope& scope, VarIndex base, const std::string& base_label, std::int64_t offset) {
    Chronicle& c = *scope.chronicle;
    const std::string label = base_label + (offset > 0 ? "+" : "-") + std::to_string(offset > 0 ? offset : -offset);
    if (const auto v = c.find_label(label)) return *v;
    const VarIndex v = c.add_variable({c.id + "." + label, label, kTimeType, std::nullopt});
    c.constraints.push_back(Constraint::compare(CmpOp::Eq, v, base, offset));
    return v;
  }

  VarIndex constant(Scope& scope, TypeId type, std::int64_t value) {
    const TypeDef& def = p_.type(type);
    std::string label;
    switch (def.kind) {
      case TypeKind::Objects: label = def.render(value); break;
      case TypeKind::IntRange: label = def.name + "#" + std::to_string(value); break;
      case TypeKind::Time: label = "@" + std::to_string(value); break;
    }
    Chronicle& c = *scope.chronicle;
    if (const auto v = c.find_label(label)) {
      if (c.variable(*v).type == type && c.variable(*v).value == value) return *v;
      label = "'" + label;  // a parameter declared before the object took the plain name
      if (const auto w = c.find_label(label)) return *w;
    }
    return c.add_variable({c.id + "." + label, label, type, value});
  }

  VarIndex time_constant(Scope& scope, std::int64_t t) { return constant(scope, kTimeType, t); }

  // A value of type `expected`: a variable in scope, an object constant, or an integer.
  std::optional<VarIndex> value(Scope& scope, TypeId expected) {
    const TypeDef& type = p_.type(expected);
    if (peek().kind == Tok::Int || at("-")) {
      const auto [v, span] = expect_int();
      if (type.kind == TypeKind::Objects) {
        error(span, "expected a value of type " + type.name + " but found an integer");
        return std::nullopt;
      }
      if (!type.contains(v)) {
        error(span, std::to_string(v) + " is outside type " + type.name);
        return std::nullopt;
      }
      return constant(scope, expected, v);
    }
    const Token name = expect_ident("a value");
    if (const auto it = scope.names.find(name.text); it != scope.names.end()) {
      const TypeId actual = scope.chronicle->variable(it->second).type;
      if (actual != expected) {
        error(name.span, "'" + name.text + "' has type " + p_.type(actual).name + ", expected " + type.name);
        return std::nullopt;
      }
      return it->second;
    }
    if (const auto it = constants_.find(name.text); it != constants_.end()) {
      if (it->second.first != expected) {
        error(name.span, "'" + name.text + "' is a " + p_.type(it->second.first).name + ", expected " + type.name);
        return std::nullopt;
      }
      return constant(scope, expected, it->second.second);
    }
    error(name.span, "unknown identifier '" + name.text + "'");
    return std::nullopt;
  }

  // `f(args) == v`, `f(args) := v`, or `f(args)` for a boolean fluent.
  // Returns false when the statement is a condition and `effects_only` is set.
  bool assertion(Scope& scope, std::optional<VarIndex> s, std::optional<VarIndex> e, bool goal,
                 bool effects_only = false) {
    const Token name = expect_ident("a fluent");
    const auto fluent = p_.find_fluent(name.text);
    if (!fluent) error(name.span, "unknown fluent '" + name.text + "'");
    const FluentSignature* sig = fluent ? &p_.fluent(*fluent) : nullptr;

    StateVariableRef sv;
    bool ok = sig != nullptr;
    std::size_t arity = 0;
    if (accept("(")) {
      if (!at(")")) {
        do {
          if (sig && arity < sig->params.size()) {
            const auto v = value(scope, sig->params[arity]);
            ok = ok && v.has_value();
            if (v) sv.params.push_back(*v);
          } else {
            skip_value();
          }
          ++arity;
        } while (accept(","));
      }
      expect(")");
    }
    if (sig && arity != sig->params.size()) {
      error(name.span, "'" + name.text + "' takes " + std::to_string(sig->params.size()) + " argument(s), got " +
                           std::to_string(arity));
      ok = false;
    }
    if (fluent) sv.fluent = *fluent;

    const SourceSpan op_span = peek().span;
    bool is_effect = false;
    std::optional<VarIndex> v;
    if (at(";") && sig && sig->value_type == kBoolType) {
      v = constant(scope, kBoolType, 1);
    } else {
      if (accept(":=")) is_effect = true;
      else expect("==");
      if (sig) v = value(scope, sig->value_type);
      else skip_value();
    }
    expect(";");
    if (effects_only && !is_effect) return false;
    if (goal && is_effect) {
      error(op_span, "goals cannot contain effects");
      ok = false;
    }
    if (!ok || !v || !s || !e) return true;
    if (is_effect) scope.chronicle->effects.push_back({*s, *e, std::move(sv), *v});
    else scope.chronicle->conditions.push_back({*s, *e, std::move(sv), *v});
    return true;
  }

  void skip_value() {
    if (peek().kind == Tok::Int || at("-")) expect_int();
    else expect_ident("a value");
  }

  // ---- constraints ----

  std::optional<TypeId> side_type(const Scope& scope, const Side& side) const {
    if (!side.var) return std::nullopt;
    return scope.chronicle->variable(*side.var).type;
  }

  std::optional<Side> side(Scope& scope) {
    Side out;
    out.span = peek().span;
    if (peek().kind == Tok::Int || at("-")) {
      out.literal = expect_int().first;
    } else {
      const Token name = expect_ident("an operand");
      if (const auto it = scope.names.find(name.text); it != scope.names.end()) {
        out.var = it->second;
      } else if (const auto c = constants_.find(name.text); c != constants_.end()) {
        out.var = constant(scope, c->second.first, c->second.second);
      } else {
        error(name.span, "unknown identifier '" + name.text + "'");
      }
      if (at("+") || at("-")) {
        const bool minus = take().text == "-";
        if (peek().kind != Tok::Int) fail(peek().span, "expected an integer but found " + describe(peek()));
        out.offset = minus ? -take().value : take().value;
      }
      if (!out.var) return std::nullopt;
    }
    return out;
  }

  void constraint(Scope& scope) {
    const SourceSpan span = peek().span;
    if (peek().kind == Tok::Ident && at_word("in", 1)) return membership(scope);
    auto lhs = side(scope);
    static const std::map<std::string, std::pair<CmpOp, bool>, std::less<>> kOps = {
        {"==", {CmpOp::Eq, false}}, {"!=", {CmpOp::Ne, false}}, {"<", {CmpOp::Lt, false}},
        {"<=", {CmpOp::Le, false}}, {">", {CmpOp::Lt, true}},   {">=", {CmpOp::Le, true}}};
    const auto op_it = peek().kind == Tok::Punct ? kOps.find(peek().text) : kOps.end();
    if (op_it == kOps.end()) fail(peek().span, "expected a comparison operator but found " + describe(peek()));
    take();
    auto rhs = side(scope);
    expect(";");
    if (!lhs || !rhs) return;
    auto [op, swap] = op_it->second;
    if (swap) std::swap(lhs, rhs);

    const auto lt = side_type(scope, *lhs);
    const auto rt = side_type(scope, *rhs);
    if (lt && rt && *lt != *rt) {
      error(span, "cannot compare " + p_.type(*lt).name + " with " + p_.type(*rt).name);
      return;
    }
    const auto type = lt ? lt : rt;
    if (type && p_.type(*type).kind == TypeKind::Objects) {
      if (op != CmpOp::Eq && op != CmpOp::Ne) return error(span, "objects can only be compared with == and !=");
      if (lhs->offset || rhs->offset) return error(span, "offsets apply to numbers and timepoints only");
      if (!lt || !rt) return error(span, "cannot compare " + p_.type(*type).name + " with an integer");
    }
    // lhs.v + a op rhs.v + b  <=>  lhs.v op rhs.v + (b - a)
    auto operand = [](const Side& s) -> Operand<VarIndex> {
      if (s.var) return *s.var;
      return s.literal + s.offset;
    };
    const std::int64_t offset = (rhs->var ? rhs->offset : 0) - (lhs->var ? lhs->offset : 0);
    scope.chronicle->constraints.push_back(Constraint::compare(op, operand(*lhs), operand(*rhs), offset));
  }

  // `x in {A, B}`
  void membership(Scope& scope) {
    const Token name = take();
    take();
    const auto it = scope.names.find(name.text);
    std::optional<TypeId> type;
    if (it == scope.names.end()) error(name.span, "'" + name.text + "' is not a variable");
    else type = scope.chronicle->variable(it->second).type;
    expect("{");
    std::vector<Constraint> options;
    bool ok = type.has_value();
    if (!at("}")) {
      do {
        if (type) {
          const auto v = value(scope, *type);
          ok = ok && v.has_value();
          if (v) options.push_back(Constraint::compare(CmpOp::Eq, it->second, *v));
        } else {
          skip_value();
        }
      } while (accept(","));
    }
    expect("}");
    expect(";");
    if (ok) scope.chronicle->constraints.push_back(Constraint::any_of(std::move(options)));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Problem p_;
  Scope initial_;
  std::set<std::string, std::less<>> names_;  // types, fluents, actions
  std::map<std::string, std::pair<TypeId, std::int64_t>, std::less<>> constants_;
  std::vector<ParseDiagnostic> diagnostics_;
};

}  // namespace

ParseResult parse_problem(std::string_view text) {
  try {
    return Parser(lex(text)).run();
  } catch (const SyntaxError& e) {
    return {std::nullopt, {e.diagnostic}};
  } catch (const std::exception& e) {
    return {std::nullopt, {{Severity::Error, e.what(), SourceSpan{}}}};
  }
}

}  // namespace lcp
