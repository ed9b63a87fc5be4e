#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcp/encoder.h"

namespace lcp {

/// Deterministic SMT-LIB v2 script (logic QF_LIA) for `f`. Each assertion is
/// preceded by a `; tag:` comment naming its family and source.
std::string emit_smtlib(const Formula& f);

/// Minimal s-expression tree for reading solver output.
struct SExpr {
  std::string atom;  // empty for lists
  std::vector<SExpr> list;
  bool is_atom() const { return !atom.empty(); }
};

class SmtParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses every top-level s-expression in `text`. `|quoted|` symbols are
/// unquoted; `;` comments are skipped.
std::vector<SExpr> parse_sexprs(std::string_view text);

/// A solver assignment: variable name to integer value (booleans as 0/1).
using Model = std::map<std::string, std::int64_t>;

/// Reads a model given either as `(model? (define-fun x () Int v) ...)` or as a
/// get-value list `((x v) ...)`. Integers may be written `(- n)`.
Model parse_model(const SExpr& e);

}  // namespace lcp
