#include "fixtures.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lcp/anml.h"

namespace lcp::testing {

std::string source_path(const std::string& relative) { return std::string(LCP_SOURCE_DIR) + "/" + relative; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Problem parse_or_throw(const std::string& text) {
  auto result = parse_problem(text);
  if (!result.ok()) {
    std::string message;
    for (const auto& d : result.diagnostics) message += format_diagnostic(d) + "\n";
    throw std::runtime_error(message);
  }
  return std::move(*result.problem);
}

const Problem& truck() {
  static const Problem p = parse_or_throw(read_text(source_path("data/truck.anml")));
  return p;
}

const Problem& rovers_like() {
  static const Problem p = parse_or_throw(read_text(source_path("data/rovers_like.anml")));
  return p;
}

}  // namespace lcp::testing
