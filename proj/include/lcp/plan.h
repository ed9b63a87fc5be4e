#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcp/bounded.h"
#include "lcp/model.h"

namespace lcp {

/// A plan value: an object constant is carried by name, numbers as integers.
struct PlanValue {
  std::string symbol;       // set for object constants
  std::int64_t number = 0;  // used when symbol is empty

  bool operator==(const PlanValue&) const = default;
  static PlanValue object(std::string name) { return {std::move(name), 0}; }
  static PlanValue integer(std::int64_t v) { return {"", v}; }
  bool is_object() const { return !symbol.empty(); }
  std::string to_string() const { return is_object() ? symbol : std::to_string(number); }
};

struct PlanStep {
  std::string action;
  int instance = 0;  // 0 when unknown (hand-written plans)
  std::vector<PlanValue> params;
  std::int64_t start = 0;
  std::int64_t end = 0;
  // Values of the step's remaining non-constant variables, by label.
  std::map<std::string, PlanValue> bindings;

  bool operator==(const PlanStep&) const = default;
};

struct Plan {
  std::vector<PlanStep> steps;
  // Values of the initial chronicle's non-constant variables, by label.
  std::map<std::string, PlanValue> goal;
  int depth = 0;

  bool operator==(const Plan&) const = default;
};

nlohmann::ordered_json plan_to_json(const Plan& plan);
/// Throws nlohmann::json::exception on malformed input.
Plan plan_from_json(const nlohmann::json& j);

/// Integer encoding of `v` in `type`, or nullopt when it does not belong to it.
std::optional<std::int64_t> decode_value(const TypeDef& type, const PlanValue& v);
PlanValue encode_value(const TypeDef& type, std::int64_t value);

/// Builds the plan described by a total assignment of a bounded problem:
/// `values[c][v]` is the value of variable v of chronicle c. Steps are the
/// present action chronicles sorted by (start, template name, instance).
/// Throws ModelError if a present chronicle holds an out-of-domain value.
Plan assemble_plan(const BoundedProblem& bp, const std::vector<bool>& present,
                   const std::vector<std::vector<std::int64_t>>& values);

/// One line per step: `start: Action(p1, ...) [end]`.
std::string render_plan(const Plan& plan);

}  // namespace lcp
