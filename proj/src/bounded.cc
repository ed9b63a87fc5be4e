#include "lcp/bounded.h"

namespace lcp {

BoundedProblem gen_problem(const Problem& p, int k) {
  if (k < 0) throw ModelError("depth must be non-negative");
  BoundedProblem bp;
  bp.problem = &p;
  bp.depth = k;
  bp.chronicles.push_back(p.initial);
  bp.presence.push_back({"true", 0, true});
  bp.instances.resize(p.templates.size());
  for (std::size_t a = 0; a < p.templates.size(); ++a) {
    for (int i = 1; i <= k; ++i) {
      const std::size_t pos = bp.chronicles.size();
      bp.chronicles.push_back(instantiate_template(p.templates[a], i, p));
      bp.presence.push_back({"o_" + bp.chronicles.back().id, pos, false});
      bp.instances[a].push_back(pos);
    }
  }
  return bp;
}

std::vector<ConditionToken> condition_tokens(const BoundedProblem& bp) {
  std::vector<ConditionToken> out;
  for (std::size_t c = 0; c < bp.chronicles.size(); ++c) {
    const auto& conditions = bp.chronicles[c].conditions;
    for (std::size_t i = 0; i < conditions.size(); ++i) {
      const auto& cond = conditions[i];
      out.push_back({c, i, cond.start, cond.end, cond.sv, cond.value});
    }
  }
  return out;
}

std::vector<EffectToken> effect_tokens(const BoundedProblem& bp) {
  std::vector<EffectToken> out;
  for (std::size_t c = 0; c < bp.chronicles.size(); ++c) {
    const auto& chronicle = bp.chronicles[c];
    for (std::size_t i = 0; i < chronicle.effects.size(); ++i) {
      const auto& eff = chronicle.effects[i];
      out.push_back({c, i, eff.start, eff.end, chronicle.id + ".eff" + std::to_string(i) + ".t", eff.sv,
                     eff.value});
    }
  }
  return out;
}

}  // namespace lcp
