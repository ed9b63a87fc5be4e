#pragma once

#include <string>

#include "lcp/model.h"

namespace lcp::testing {

/// Absolute path of a file in the source tree.
std::string source_path(const std::string& relative);

std::string read_text(const std::string& path);

/// Parses ANML text; throws std::runtime_error with the diagnostics on failure.
Problem parse_or_throw(const std::string& text);

/// data/truck.anml, parsed once.
const Problem& truck();

/// data/rovers_like.anml, parsed once.
const Problem& rovers_like();

}  // namespace lcp::testing
