#include "lcp/planner.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>

#include "lcp/validator.h"

namespace lcp {

Plan extract_solution(const Model& m, const BoundedProblem& bp) {
  auto lookup = [&](const std::string& name) {
    const auto it = m.find(name);
    if (it == m.end()) throw ModelError("model has no value for " + name);
    return it->second;
  };
  std::vector<bool> present(bp.size());
  std::vector<std::vector<std::int64_t>> values(bp.size());
  for (std::size_t c = 0; c < bp.size(); ++c) {
    present[c] = bp.presence[c].constant_true || lookup(bp.presence[c].id) != 0;
    for (const auto& var : bp.chronicle(c).variables)
      values[c].push_back(var.value ? *var.value : lookup(var.id));
  }
  return assemble_plan(bp, present, values);
}

namespace {

Term pin(FVar v, std::int64_t value) { return Term::compare(CmpOp::Eq, v, value); }

}  // namespace

bool pin_plan(Formula& f, const BoundedProblem& bp, const Plan& plan) {
  const Problem& p = *bp.problem;
  std::vector<Assertion> pinned;
  auto pin_label = [&](const Chronicle& c, const std::string& label, const PlanValue& value) {
    const auto v = c.find_label(label);
    if (!v) return false;
    const Variable& var = c.variable(*v);
    const auto decoded = decode_value(p.type(var.type), value);
    if (!decoded) return false;
    if (var.value) return *var.value == *decoded;
    const auto fv = f.find(var.id);
    if (!fv) return false;
    pinned.push_back({pin(*fv, *decoded), Tag::Pinned, var.id});
    return true;
  };

  for (const auto& [label, value] : plan.goal)
    if (!pin_label(bp.chronicle(0), label, value)) return false;

  std::map<std::string, std::vector<const PlanStep*>> by_template;
  for (const auto& s : plan.steps) by_template[s.action].push_back(&s);
  for (std::size_t a = 0; a < p.templates.size(); ++a) {
    const ActionTemplate& t = p.templates[a];
    auto steps = by_template[t.name];
    by_template.erase(t.name);
    std::stable_sort(steps.begin(), steps.end(), [](const PlanStep* x, const PlanStep* y) { return x->start < y->start; });
    if (steps.size() > bp.instances[a].size()) return false;
    for (std::size_t i = 0; i < bp.instances[a].size(); ++i) {
      const std::size_t c = bp.instances[a][i];
      const Chronicle& chronicle = bp.chronicle(c);
      const FVar presence = *f.find(bp.presence[c].id);
      if (i >= steps.size()) {
        pinned.push_back({Term::negation(Term::boolean(presence)), Tag::Pinned, bp.presence[c].id});
        continue;
      }
      const PlanStep& step = *steps[i];
      pinned.push_back({Term::boolean(presence), Tag::Pinned, bp.presence[c].id});
      if (step.params.size() != t.parameters.size()) return false;
      for (std::size_t k = 0; k < step.params.size(); ++k)
        if (!pin_label(chronicle, chronicle.variable(t.parameters[k]).label, step.params[k])) return false;
      if (!pin_label(chronicle, chronicle.variable(*chronicle.start).label, PlanValue::integer(step.start)) ||
          !pin_label(chronicle, chronicle.variable(*chronicle.end).label, PlanValue::integer(step.end)))
        return false;
      for (const auto& [label, value] : step.bindings)
        if (!pin_label(chronicle, label, value)) return false;
    }
  }
  if (!by_template.empty()) return false;  // steps of unknown actions
  for (auto& a : pinned) f.assertions.push_back(std::move(a));
  return true;
}

namespace {

std::string describe(const ValidationReport& report) {
  std::string out;
  for (const auto& v : report.violations) out += std::string(out.empty() ? "" : "; ") + to_string(v.kind) + ": " + v.message;
  return out;
}

}  // namespace

SolveOutcome lcp(const Problem& p, const LcpOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  auto elapsed = [&](Clock::time_point since) { return std::chrono::duration<double>(Clock::now() - since).count(); };

  for (int k = 0; k <= options.solver.k_max; ++k) {
    const double remaining = options.solver.deadline_seconds - elapsed(started);
    if (remaining <= 0) return TimedOut{k};
    const auto depth_started = Clock::now();
    DepthReport report;
    report.depth = k;
    auto finish = [&](std::string verdict) {
      report.verdict = std::move(verdict);
      report.seconds = elapsed(depth_started);
      if (options.on_depth) options.on_depth(report);
    };
    try {
      const BoundedProblem bp = gen_problem(p, k);
      const Formula f = encode(bp, options.encoding);
      report.variables = f.variables.size();
      report.assertions = f.assertions.size();
      if (options.emit_dir) {
        std::filesystem::create_directories(*options.emit_dir);
        std::ofstream out(*options.emit_dir / ("depth_" + std::to_string(k) + ".smt2"), std::ios::binary);
        out << emit_smtlib(f);
        if (!out) throw std::runtime_error("cannot write to " + options.emit_dir->string());
      }
      const auto result = check_smt(f, options.solver.command, std::min(options.solver.timeout_seconds, remaining));
      if (std::holds_alternative<Unsat>(result)) {
        finish("unsat");
        continue;
      }
      if (std::holds_alternative<SolverTimeout>(result)) {
        finish("timeout");
        return TimedOut{k};
      }
      if (const auto* failure = std::get_if<SolverFailure>(&result)) {
        finish("error");
        return SolverError{k, failure->message};
      }
      Plan plan = extract_solution(std::get<Model>(result), bp);
      const auto check = validate_plan(p, plan);
      if (!check.valid()) {
        finish("error");
        return SolverError{k, "extracted plan is invalid: " + describe(check)};
      }
      finish("sat");
      return Solution{std::move(plan), k};
    } catch (const std::exception& e) {
      finish("error");
      return SolverError{k, e.what()};
    }
  }
  return Exhausted{options.solver.k_max};
}

}  // namespace lcp
