#pragma once

#include <json.hpp>

#include "lcp/model.h"

namespace lcp {

/// Canonical JSON of a problem. Keys come in a fixed order (types, fluents,
/// initial, templates) and everything is referenced by position, so equal
/// problems serialize to identical text. The builtin time and boolean types
/// are implicit.
nlohmann::ordered_json problem_to_json(const Problem& p);

/// Inverse of problem_to_json. Throws ModelError or nlohmann::json::exception
/// on malformed input.
Problem problem_from_json(const nlohmann::json& j);

}  // namespace lcp
