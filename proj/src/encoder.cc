#include "lcp/encoder.h"

#include <algorithm>

namespace lcp {

const char* to_string(Tag tag) {
  switch (tag) {
    case Tag::Domain: return "domain";
    case Tag::Coherence: return "coherence";
    case Tag::Support: return "support";
    case Tag::Consistency: return "consistency";
    case Tag::Symmetry: return "symmetry";
    case Tag::Pinned: return "pinned";
  }
  return "?";
}

FVar Formula::declare(SortedVar var) {
  const auto index = static_cast<std::uint32_t>(variables.size());
  if (!by_name_.emplace(var.name, index).second)
    throw ModelError("variable '" + var.name + "' declared twice");
  variables.push_back(std::move(var));
  return FVar{index};
}

std::optional<FVar> Formula::find(const std::string& name) const {
  const auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return FVar{it->second};
}

std::size_t Formula::count(Tag tag) const {
  std::size_t n = 0;
  for (const auto& a : assertions) n += a.tag == tag ? 1 : 0;
  return n;
}

void Formula::add(Term term, Tag tag, std::string source) {
  if (term.is_true()) return;
  assertions.push_back({std::move(term), tag, std::move(source)});
}

namespace {

std::string token_name(const BoundedProblem& bp, std::size_t owner, const char* kind, std::size_t index) {
  return bp.chronicle(owner).id + "." + kind + std::to_string(index);
}

}  // namespace

Encoder::Encoder(const BoundedProblem& bp, EncodeOptions options)
    : bp_(bp), options_(options), conditions_(condition_tokens(bp)), effects_(effect_tokens(bp)) {
  const Problem& p = *bp.problem;
  auto bounds_of = [&](TypeId t) {
    const TypeDef& def = p.type(t);
    SortedVar var;
    var.lower = def.min_value();
    var.upper = def.kind == TypeKind::Time ? options_.horizon : def.max_value();
    return var;
  };

  vars_.resize(bp.size());
  presence_.resize(bp.size());
  std::size_t next_effect = 0;
  for (std::size_t c = 0; c < bp.size(); ++c) {
    const Chronicle& chronicle = bp.chronicle(c);
    if (!bp.presence[c].constant_true)
      presence_[c] = formula_.declare({bp.presence[c].id, Sort::Bool, std::nullopt, std::nullopt});
    for (const auto& var : chronicle.variables) {
      if (var.is_constant()) {
        vars_[c].push_back(std::nullopt);
        continue;
      }
      SortedVar decl = bounds_of(var.type);
      decl.name = var.id;
      vars_[c].push_back(formula_.declare(std::move(decl)));
    }
    for (; next_effect < effects_.size() && effects_[next_effect].owner == c; ++next_effect) {
      SortedVar decl = bounds_of(kTimeType);
      decl.name = effects_[next_effect].persistence;
      formula_.declare(std::move(decl));
    }
  }
}

Term Encoder::presence(std::size_t chronicle) const {
  if (const auto& v = presence_.at(chronicle)) return Term::boolean(*v);
  return Term::constant(true);
}

Operand<FVar> Encoder::operand(std::size_t chronicle, VarIndex v) const {
  if (const auto& f = vars_.at(chronicle).at(v.value)) return *f;
  return *bp_.chronicle(chronicle).variable(v).value;
}

FVar Encoder::persistence(const EffectToken& e) const {
  if (const auto f = formula_.find(e.persistence)) return *f;
  throw ModelError("unknown effect token " + e.persistence);
}

Term Encoder::fluent_atom(CmpOp op, const StateVariableRef& a, const StateVariableRef& b) const {
  return Term::compare(op, std::int64_t{a.fluent.value}, std::int64_t{b.fluent.value});
}

Term Encoder::coherent(const EffectToken& a, const EffectToken& b) const {
  const bool same_fluent = a.sv.fluent == b.sv.fluent;
  if (!same_fluent && options_.pruning) return Term::constant(true);

  const Term both = Term::all_of({presence(a.owner), presence(b.owner)});
  std::vector<Term> separated;
  separated.push_back(Term::compare(CmpOp::Le, persistence(a), operand(b.owner, b.start)));
  separated.push_back(Term::compare(CmpOp::Le, persistence(b), operand(a.owner, a.start)));
  if (same_fluent) {
    for (std::size_t i = 0; i < a.sv.params.size(); ++i)
      separated.push_back(
          Term::compare(CmpOp::Ne, operand(a.owner, a.sv.params[i]), operand(b.owner, b.sv.params[i])));
  } else {
    separated.push_back(fluent_atom(CmpOp::Ne, a.sv, b.sv));
  }
  return Term::implies(both, Term::any_of(std::move(separated)));
}

Term Encoder::supported_by(const ConditionToken& c, const EffectToken& e) const {
  const bool same_fluent = c.sv.fluent == e.sv.fluent;
  if (!same_fluent && options_.pruning) return Term::constant(false);

  std::vector<Term> parts;
  parts.push_back(presence(e.owner));
  parts.push_back(Term::compare(CmpOp::Le, operand(e.owner, e.end), operand(c.owner, c.start)));
  parts.push_back(Term::compare(CmpOp::Le, operand(c.owner, c.end), persistence(e)));
  if (same_fluent) {
    for (std::size_t i = 0; i < c.sv.params.size(); ++i)
      parts.push_back(
          Term::compare(CmpOp::Eq, operand(c.owner, c.sv.params[i]), operand(e.owner, e.sv.params[i])));
    parts.push_back(Term::compare(CmpOp::Eq, operand(c.owner, c.value), operand(e.owner, e.value)));
  } else {
    parts.push_back(fluent_atom(CmpOp::Eq, c.sv, e.sv));
  }
  return Term::all_of(std::move(parts));
}

Term Encoder::supported(const ConditionToken& c, std::span<const EffectToken> effects) const {
  std::vector<Term> supporters;
  for (const auto& e : effects) supporters.push_back(supported_by(c, e));
  return Term::implies(presence(c.owner), Term::any_of(std::move(supporters)));
}

Term Encoder::consistent(std::size_t chronicle) const {
  const Chronicle& c = bp_.chronicle(chronicle);
  auto map = [&](const VarIndex& v) { return operand(chronicle, v); };
  auto ordered = [&](VarIndex first, VarIndex second) {
    return Term::compare(CmpOp::Le, operand(chronicle, first), operand(chronicle, second));
  };

  std::vector<Term> parts;
  for (const auto& x : c.constraints) parts.push_back(transform(x, map));
  // An interval shared by several tokens is ordered once.
  auto add_ordering = [&](VarIndex first, VarIndex second) {
    if (first == second) return;
    Term t = ordered(first, second);
    if (std::find(parts.begin(), parts.end(), t) == parts.end()) parts.push_back(std::move(t));
  };
  if (c.start && c.end) add_ordering(*c.start, *c.end);
  for (const auto& cond : c.conditions) add_ordering(cond.start, cond.end);
  for (const auto& eff : effects_) {
    if (eff.owner != chronicle) continue;
    add_ordering(eff.start, eff.end);
    parts.push_back(Term::compare(CmpOp::Le, operand(chronicle, eff.end), persistence(eff)));
  }
  return Term::implies(presence(chronicle), Term::all_of(std::move(parts)));
}

std::vector<Term> Encoder::symmetry_constraints() const {
  std::vector<Term> out;
  for (const auto& instances : bp_.instances) {
    for (std::size_t i = 0; i + 1 < instances.size(); ++i) {
      const std::size_t prev = instances[i];
      const std::size_t next = instances[i + 1];
      out.push_back(Term::implies(presence(next), presence(prev)));
      out.push_back(Term::compare(CmpOp::Le, operand(prev, *bp_.chronicle(prev).start),
                                  operand(next, *bp_.chronicle(next).start)));
    }
  }
  return out;
}

Formula Encoder::encode() && {
  for (std::size_t i = 0; i < formula_.variables.size(); ++i) {
    const auto& var = formula_.variables[i];
    if (var.sort != Sort::Int) continue;
    const FVar v{static_cast<std::uint32_t>(i)};
    std::vector<Term> bounds;
    if (var.lower) bounds.push_back(Term::compare(CmpOp::Le, *var.lower, v));
    if (var.upper) bounds.push_back(Term::compare(CmpOp::Le, v, *var.upper));
    formula_.add(Term::all_of(std::move(bounds)), Tag::Domain, var.name);
  }
  for (std::size_t c = 0; c < bp_.size(); ++c)
    formula_.add(consistent(c), Tag::Consistency, bp_.chronicle(c).id);
  for (std::size_t i = 0; i < effects_.size(); ++i) {
    for (std::size_t j = i + 1; j < effects_.size(); ++j) {
      const auto& a = effects_[i];
      const auto& b = effects_[j];
      formula_.add(coherent(a, b), Tag::Coherence,
                   token_name(bp_, a.owner, "eff", a.index) + " " + token_name(bp_, b.owner, "eff", b.index));
    }
  }
  for (const auto& c : conditions_)
    formula_.add(supported(c, effects_), Tag::Support, token_name(bp_, c.owner, "cond", c.index));
  if (options_.symmetry) {
    std::size_t n = 0;
    for (auto& t : symmetry_constraints()) formula_.add(std::move(t), Tag::Symmetry, "sym" + std::to_string(n++));
  }
  return std::move(formula_);
}

Formula encode(const BoundedProblem& bp, const EncodeOptions& options) {
  return Encoder(bp, options).encode();
}

}  // namespace lcp
