#include "lcp/smtlib.h"

#include <charconv>
#include <sstream>

namespace lcp {

std::string emit_smtlib(const Formula& f) {
  std::ostringstream out;
  out << "; lifted constraint-based planning encoding\n";
  out << "(set-logic QF_LIA)\n";
  for (const auto& v : f.variables)
    out << "(declare-const " << v.name << (v.sort == Sort::Bool ? " Bool" : " Int") << ")\n";
  auto name_of = [&](const FVar& v) -> const std::string& { return f.variable(v).name; };
  for (const auto& a : f.assertions) {
    out << "; tag: " << to_string(a.tag) << " " << a.source << "\n";
    out << "(assert " << to_sexpr(a.term, name_of) << ")\n";
  }
  out << "(check-sat)\n";
  if (!f.variables.empty()) out << "(get-model)\n";
  return out.str();
}

namespace {

class SExprReader {
 public:
  explicit SExprReader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    while (skip_blank()) out.push_back(read());
    return out;
  }

 private:
  bool skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else {
        return true;
      }
    }
    return false;
  }

  SExpr read() {
    const char c = text_[pos_];
    if (c == ')') throw SmtParseError("unbalanced ')' at offset " + std::to_string(pos_));
    if (c == '(') {
      ++pos_;
      SExpr list;
      while (true) {
        if (!skip_blank()) throw SmtParseError("unterminated list");
        if (text_[pos_] == ')') {
          ++pos_;
          return list;
        }
        list.list.push_back(read());
      }
    }
    SExpr atom;
    if (c == '|') {
      const auto close = text_.find('|', pos_ + 1);
      if (close == std::string_view::npos) throw SmtParseError("unterminated quoted symbol");
      atom.atom = std::string(text_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      if (atom.atom.empty()) atom.atom = "||";
      return atom;
    }
    if (c == '"') {
      const auto close = text_.find('"', pos_ + 1);
      if (close == std::string_view::npos) throw SmtParseError("unterminated string");
      atom.atom = std::string(text_.substr(pos_, close - pos_ + 1));
      pos_ = close + 1;
      return atom;
    }
    const auto start = pos_;
    while (pos_ < text_.size()) {
      const char d = text_[pos_];
      if (d == '(' || d == ')' || d == ' ' || d == '\t' || d == '\n' || d == '\r' || d == ';') break;
      ++pos_;
    }
    atom.atom = std::string(text_.substr(start, pos_ - start));
    return atom;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t parse_value(const SExpr& e) {
  if (e.is_atom()) {
    if (e.atom == "true") return 1;
    if (e.atom == "false") return 0;
    std::int64_t v = 0;
    const auto* first = e.atom.data();
    const auto* last = first + e.atom.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw SmtParseError("not an integer value: " + e.atom);
    return v;
  }
  if (e.list.size() == 2 && e.list[0].atom == "-") return -parse_value(e.list[1]);
  throw SmtParseError("unsupported model value");
}

}  // namespace

std::vector<SExpr> parse_sexprs(std::string_view text) { return SExprReader(text).read_all(); }

Model parse_model(const SExpr& e) {
  if (e.is_atom()) throw SmtParseError("expected a model list, got '" + e.atom + "'");
  Model model;
  std::size_t first = 0;
  if (!e.list.empty() && e.list[0].atom == "model") first = 1;
  for (std::size_t i = first; i < e.list.size(); ++i) {
    const auto& entry = e.list[i];
    if (entry.list.size() == 5 && entry.list[0].atom == "define-fun") {
      if (!entry.list[2].list.empty()) continue;  // functions with arguments are not ours
      model[entry.list[1].atom] = parse_value(entry.list[4]);
    } else if (entry.list.size() == 2 && entry.list[0].is_atom()) {
      model[entry.list[0].atom] = parse_value(entry.list[1]);
    } else {
      throw SmtParseError("unrecognised model entry");
    }
  }
  return model;
}

}  // namespace lcp
