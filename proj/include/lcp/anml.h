#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcp/model.h"

namespace lcp {

struct SourceSpan {
  std::size_t begin = 0;  // byte offsets, end exclusive
  std::size_t end = 0;
  int line = 1;
  int column = 1;
};

enum class Severity { Error, Warning };

struct ParseDiagnostic {
  Severity severity = Severity::Error;
  std::string message;
  SourceSpan span;
};

/// `line:col: error: message`
std::string format_diagnostic(const ParseDiagnostic& d);

/// Exactly one of `problem` and `diagnostics` is non-empty.
struct ParseResult {
  std::optional<Problem> problem;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return problem.has_value(); }
};

/// Parses the ANML subset documented in docs/anml-subset.md. A syntax error
/// stops parsing; type errors are collected and reported together.
ParseResult parse_problem(std::string_view text);

}  // namespace lcp
