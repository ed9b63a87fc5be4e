#include "lcp/oracle.h"

#include <algorithm>
#include <bit>
#include <limits>

#include "lcp/bounded.h"
#include "lcp/validator.h"

namespace lcp {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

int max_var(const Constraint& x) {
  int m = -1;
  auto operand = [&](const Operand<VarIndex>& o) {
    if (const auto* v = std::get_if<VarIndex>(&o)) m = std::max(m, static_cast<int>(v->value));
  };
  if (x.kind == ExprKind::Var) m = static_cast<int>(x.var.value);
  if (x.kind == ExprKind::Cmp) {
    operand(x.lhs);
    operand(x.rhs);
  }
  for (const auto& a : x.args) m = std::max(m, max_var(a));
  return m;
}

/// All assignments of a chronicle's variables satisfying its internal
/// constraints, with every constraint checked as soon as it is ground.
class LocalEnumerator {
 public:
  LocalEnumerator(const Problem& p, const Chronicle& c, std::int64_t horizon, std::uint64_t cap)
      : cap_(cap), values_(c.variables.size()), checks_(c.variables.size()) {
    for (const auto& var : c.variables) {
      const TypeDef& t = p.type(var.type);
      if (var.value) domains_.push_back({*var.value, *var.value});
      else if (t.kind == TypeKind::Time) domains_.push_back({0, horizon});
      else domains_.push_back({t.min_value(), *t.max_value()});
    }
    constraints_ = internal_constraints(c);
    for (const auto& x : constraints_) {
      const int m = max_var(x);
      if (m < 0) ground_.push_back(&x);
      else checks_[m].push_back(&x);
    }
  }

  /// False when the raw search space exceeds the cap.
  bool run(std::vector<std::vector<std::int64_t>>& out) {
    std::uint64_t space = 1;
    for (const auto& [lo, hi] : domains_) space = saturating_mul(space, static_cast<std::uint64_t>(hi - lo + 1));
    if (space > cap_) return false;
    auto value_of = [&](const VarIndex& v) { return values_[v.value]; };
    for (const auto* x : ground_)
      if (!evaluate(*x, value_of)) return true;
    assign(0, out);
    return true;
  }

 private:
  void assign(std::size_t i, std::vector<std::vector<std::int64_t>>& out) {
    if (i == values_.size()) {
      out.push_back(values_);
      return;
    }
    auto value_of = [&](const VarIndex& v) { return values_[v.value]; };
    for (std::int64_t x = domains_[i].first; x <= domains_[i].second; ++x) {
      values_[i] = x;
      if (std::all_of(checks_[i].begin(), checks_[i].end(), [&](const Constraint* c) { return evaluate(*c, value_of); }))
        assign(i + 1, out);
    }
  }

  std::uint64_t cap_;
  std::vector<std::pair<std::int64_t, std::int64_t>> domains_;
  std::vector<Constraint> constraints_;
  std::vector<std::int64_t> values_;
  std::vector<std::vector<const Constraint*>> checks_;
  std::vector<const Constraint*> ground_;
};

bool base_overlap(const GroundToken& a, const GroundToken& b) {
  return a.fluent == b.fluent && a.args == b.args && !(a.end <= b.start || b.end <= a.start);
}

class Search {
 public:
  Search(const BoundedProblem& bp, const std::vector<std::vector<std::vector<std::int64_t>>>& local,
         std::int64_t horizon)
      : bp_(bp), local_(local), horizon_(horizon), present_(bp.size()), choice_(bp.size()) {}

  /// Tries every combination of local assignments for the chronicles in `members`.
  bool run(const std::vector<std::size_t>& members) {
    members_ = members;
    std::fill(present_.begin(), present_.end(), false);
    for (const auto c : members) present_[c] = true;
    conditions_.clear();
    effects_.clear();
    return descend(0);
  }

  Plan witness() const {
    std::vector<std::vector<std::int64_t>> values(bp_.size());
    for (std::size_t c = 0; c < bp_.size(); ++c) {
      if (present_[c]) values[c] = local_[c][choice_[c]];
      else values[c].assign(bp_.chronicle(c).variables.size(), 0);
    }
    // Absent chronicles never reach the plan, so their placeholder zeros are not decoded.
    return assemble_plan(bp_, present_, values);
  }

 private:
  bool descend(std::size_t i) {
    if (i == members_.size()) {
      std::vector<GroundToken> effects = effects_;
      return solve_support(conditions_, effects);
    }
    const std::size_t c = members_[i];
    const std::size_t cond_mark = conditions_.size();
    const std::size_t eff_mark = effects_.size();
    for (std::size_t a = 0; a < local_[c].size(); ++a) {
      choice_[c] = a;
      ground_tokens({&bp_.chronicle(c), local_[c][a]}, conditions_, effects_);
      // Persistence is bounded by the horizon too, so no effect may end past it.
      bool clash = false;
      for (std::size_t e = eff_mark; e < effects_.size() && !clash; ++e) clash = effects_[e].end > horizon_;
      for (std::size_t e = eff_mark; e < effects_.size() && !clash; ++e)
        for (std::size_t o = 0; o < e && !clash; ++o) clash = base_overlap(effects_[e], effects_[o]);
      if (!clash && descend(i + 1)) return true;
      conditions_.resize(cond_mark);
      effects_.resize(eff_mark);
    }
    return false;
  }

  const BoundedProblem& bp_;
  const std::vector<std::vector<std::vector<std::int64_t>>>& local_;
  std::int64_t horizon_;
  std::vector<bool> present_;
  std::vector<std::size_t> choice_;
  std::vector<std::size_t> members_;
  std::vector<GroundToken> conditions_;
  std::vector<GroundToken> effects_;
};

}  // namespace

OracleResult brute_force_sat(const Problem& p, int k, const OracleConfig& cfg) {
  if (cfg.horizon < 0) throw ModelError("oracle horizon must be non-negative");
  const BoundedProblem bp = gen_problem(p, k);
  const std::size_t optional = bp.size() - 1;
  if (optional >= 63) return BudgetExceeded{std::numeric_limits<std::uint64_t>::max()};

  std::vector<std::vector<std::vector<std::int64_t>>> local(bp.size());
  for (std::size_t c = 0; c < bp.size(); ++c)
    if (!LocalEnumerator(p, bp.chronicle(c), cfg.horizon, cfg.cap).run(local[c]))
      return BudgetExceeded{std::numeric_limits<std::uint64_t>::max()};

  const std::uint64_t subsets = std::uint64_t{1} << optional;
  std::uint64_t needed = 0;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t product = local[0].size();
    for (std::size_t c = 1; c < bp.size(); ++c)
      if (mask >> (c - 1) & 1) product = saturating_mul(product, local[c].size());
    needed = saturating_add(needed, product);
  }
  if (needed > cfg.cap) return BudgetExceeded{needed};

  // Smaller plans first, so the witness is one of minimum size.
  std::vector<std::uint64_t> masks(subsets);
  for (std::uint64_t m = 0; m < subsets; ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });

  Search search(bp, local, cfg.horizon);
  for (const auto mask : masks) {
    std::vector<std::size_t> members{0};
    for (std::size_t c = 1; c < bp.size(); ++c)
      if (mask >> (c - 1) & 1) members.push_back(c);
    if (search.run(members)) return OracleSat{search.witness()};
  }
  return OracleUnsat{};
}

}  // namespace lcp
