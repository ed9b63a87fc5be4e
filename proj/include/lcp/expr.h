#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace lcp {

enum class CmpOp { Eq, Ne, Le, Lt };

const char* to_string(CmpOp op);

/// A leaf of a comparison: either a reference to a variable or an integer literal.
template <class Ref>
using Operand = std::variant<Ref, std::int64_t>;

enum class ExprKind { True, False, Var, Cmp, Not, And, Or, Implies };

/// Boolean combination of difference atoms `lhs op rhs + offset`.
///
/// The same tree shape is used for chronicle constraints (references are
/// chronicle-local variable indices) and for the compiled formula
/// (references are formula variables). The builders fold the boolean
/// constants true/false but never evaluate comparisons, so an atom between
/// two literals survives as written.
template <class Ref>
struct Expr {
  ExprKind kind = ExprKind::True;
  Ref var{};
  CmpOp op = CmpOp::Eq;
  Operand<Ref> lhs{std::int64_t{0}};
  Operand<Ref> rhs{std::int64_t{0}};
  std::int64_t offset = 0;
  std::vector<Expr> args;

  bool operator==(const Expr&) const = default;

  bool is_true() const { return kind == ExprKind::True; }
  bool is_false() const { return kind == ExprKind::False; }

  static Expr constant(bool value) {
    Expr e;
    e.kind = value ? ExprKind::True : ExprKind::False;
    return e;
  }

  static Expr boolean(Ref ref) {
    Expr e;
    e.kind = ExprKind::Var;
    e.var = std::move(ref);
    return e;
  }

  static Expr compare(CmpOp op, Operand<Ref> lhs, Operand<Ref> rhs,
                      std::int64_t offset = 0) {
    Expr e;
    e.kind = ExprKind::Cmp;
    e.op = op;
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    e.offset = offset;
    return e;
  }

  static Expr negation(Expr inner) {
    if (inner.is_true()) return constant(false);
    if (inner.is_false()) return constant(true);
    Expr e;
    e.kind = ExprKind::Not;
    e.args.push_back(std::move(inner));
    return e;
  }

  static Expr all_of(std::vector<Expr> parts) { return fold(ExprKind::And, std::move(parts)); }
  static Expr any_of(std::vector<Expr> parts) { return fold(ExprKind::Or, std::move(parts)); }

  static Expr implies(Expr premise, Expr conclusion) {
    if (premise.is_true()) return conclusion;
    if (premise.is_false() || conclusion.is_true()) return constant(true);
    Expr e;
    e.kind = ExprKind::Implies;
    e.args.push_back(std::move(premise));
    e.args.push_back(std::move(conclusion));
    return e;
  }

 private:
  // Flattens nested nodes of the same kind and drops neutral elements.
  static Expr fold(ExprKind kind, std::vector<Expr> parts) {
    const ExprKind neutral = kind == ExprKind::And ? ExprKind::True : ExprKind::False;
    const ExprKind absorbing = kind == ExprKind::And ? ExprKind::False : ExprKind::True;
    Expr e;
    e.kind = kind;
    for (auto& p : parts) {
      if (p.kind == absorbing) return constant(absorbing == ExprKind::True);
      if (p.kind == neutral) continue;
      if (p.kind == kind) {
        for (auto& q : p.args) e.args.push_back(std::move(q));
      } else {
        e.args.push_back(std::move(p));
      }
    }
    if (e.args.empty()) return constant(neutral == ExprKind::True);
    if (e.args.size() == 1) return std::move(e.args.front());
    return e;
  }
};

/// Rewrites every reference through `f`, which yields an Operand of the new
/// reference type. A boolean leaf mapped to a literal becomes a constant.
template <class Ref, class F,
          class Out = std::invoke_result_t<F&, const Ref&>,
          class Result = Expr<std::variant_alternative_t<0, Out>>>
Result transform(const Expr<Ref>& e, F&& f) {
  using NewRef = std::variant_alternative_t<0, Out>;
  auto map_operand = [&](const Operand<Ref>& o) -> Out {
    if (const auto* lit = std::get_if<std::int64_t>(&o)) return Out{*lit};
    return f(std::get<Ref>(o));
  };
  std::vector<Result> mapped;
  for (const auto& a : e.args) mapped.push_back(transform(a, f));
  switch (e.kind) {
    case ExprKind::True: return Result::constant(true);
    case ExprKind::False: return Result::constant(false);
    case ExprKind::Var: {
      Out o = f(e.var);
      if (const auto* lit = std::get_if<std::int64_t>(&o)) return Result::constant(*lit != 0);
      return Result::boolean(std::get<NewRef>(o));
    }
    case ExprKind::Cmp: return Result::compare(e.op, map_operand(e.lhs), map_operand(e.rhs), e.offset);
    case ExprKind::Not: return Result::negation(std::move(mapped.front()));
    case ExprKind::And: return Result::all_of(std::move(mapped));
    case ExprKind::Or: return Result::any_of(std::move(mapped));
    case ExprKind::Implies: return Result::implies(std::move(mapped[0]), std::move(mapped[1]));
  }
  return Result::constant(true);
}

inline bool compare_values(CmpOp op, std::int64_t lhs, std::int64_t rhs) {
  switch (op) {
    case CmpOp::Eq: return lhs == rhs;
    case CmpOp::Ne: return lhs != rhs;
    case CmpOp::Le: return lhs <= rhs;
    case CmpOp::Lt: return lhs < rhs;
  }
  return false;
}

/// Evaluates `e` under a total assignment; `value_of` maps a reference to
/// its integer value (booleans as 0/1).
template <class Ref, class F>
bool evaluate(const Expr<Ref>& e, F&& value_of) {
  auto operand = [&](const Operand<Ref>& o) -> std::int64_t {
    if (const auto* lit = std::get_if<std::int64_t>(&o)) return *lit;
    return value_of(std::get<Ref>(o));
  };
  switch (e.kind) {
    case ExprKind::True: return true;
    case ExprKind::False: return false;
    case ExprKind::Var: return value_of(e.var) != 0;
    case ExprKind::Cmp: return compare_values(e.op, operand(e.lhs), operand(e.rhs) + e.offset);
    case ExprKind::Not: return !evaluate(e.args.front(), value_of);
    case ExprKind::And:
      for (const auto& a : e.args)
        if (!evaluate(a, value_of)) return false;
      return true;
    case ExprKind::Or:
      for (const auto& a : e.args)
        if (evaluate(a, value_of)) return true;
      return false;
    case ExprKind::Implies: return !evaluate(e.args[0], value_of) || evaluate(e.args[1], value_of);
  }
  return false;
}

std::string smt_integer(std::int64_t value);

/// Renders `e` as an SMT-LIB term; `name_of` maps a reference to a symbol.
template <class Ref, class F>
std::string to_sexpr(const Expr<Ref>& e, F&& name_of) {
  auto operand = [&](const Operand<Ref>& o) -> std::string {
    if (const auto* lit = std::get_if<std::int64_t>(&o)) return smt_integer(*lit);
    return std::string(name_of(std::get<Ref>(o)));
  };
  auto nary = [&](const char* head) {
    std::string out = std::string("(") + head;
    for (const auto& a : e.args) out += " " + to_sexpr(a, name_of);
    return out + ")";
  };
  switch (e.kind) {
    case ExprKind::True: return "true";
    case ExprKind::False: return "false";
    case ExprKind::Var: return std::string(name_of(e.var));
    case ExprKind::Cmp: {
      std::string rhs = operand(e.rhs);
      if (e.offset > 0) rhs = "(+ " + rhs + " " + smt_integer(e.offset) + ")";
      if (e.offset < 0) rhs = "(- " + rhs + " " + smt_integer(-e.offset) + ")";
      const char* head = e.op == CmpOp::Eq ? "=" : e.op == CmpOp::Ne ? "distinct" : e.op == CmpOp::Le ? "<=" : "<";
      return std::string("(") + head + " " + operand(e.lhs) + " " + rhs + ")";
    }
    case ExprKind::Not: return nary("not");
    case ExprKind::And: return nary("and");
    case ExprKind::Or: return nary("or");
    case ExprKind::Implies: return nary("=>");
  }
  return "true";
}

}  // namespace lcp
