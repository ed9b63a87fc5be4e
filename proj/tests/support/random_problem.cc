#include "random_problem.h"

#include <random>
#include <sstream>
#include <vector>

namespace lcp::testing {

namespace {

struct TypeInfo {
  std::string name;
  std::vector<std::string> members;
};

struct FluentInfo {
  std::string name;
  int param_type = -1;  // index into types, -1 for a constant fluent
  int value_type = -1;  // index into types, -1 for boolean
};

class Generator {
 public:
  explicit Generator(std::uint32_t seed) : rng_(seed) {}

  TinyInstance run(std::uint32_t seed) {
    TinyInstance out;
    out.seed = seed;
    out.k = pick(0, 2);
    out.horizon = pick(4, 8);

    const int type_count = pick(1, 2);
    for (int t = 0; t < type_count; ++t) {
      TypeInfo type{t == 0 ? "A" : "B", {}};
      const int members = pick(1, 3);
      for (int m = 0; m < members; ++m) type.members.push_back(type.name.substr(0, 1) + std::string(1, 'a' + m));
      types_.push_back(type);
    }
    const int fluent_count = pick(1, 2);
    for (int f = 0; f < fluent_count; ++f) {
      FluentInfo fluent{"f" + std::to_string(f), chance(0.7) ? pick(0, type_count - 1) : -1,
                        chance(0.5) ? -1 : pick(0, type_count - 1)};
      fluents_.push_back(fluent);
    }

    std::ostringstream src;
    for (const auto& t : types_) {
      src << "type " << t.name << " = {";
      for (std::size_t m = 0; m < t.members.size(); ++m) src << (m ? ", " : "") << t.members[m];
      src << "};\n";
    }
    for (const auto& f : fluents_) {
      src << "fluent " << type_name(f.value_type) << " " << f.name;
      if (f.param_type >= 0) src << "(" << types_[f.param_type].name << " x)";
      src << ";\n";
    }

    const int template_count = pick(1, 2);
    for (int a = 0; a < template_count; ++a) src << action("Act" + std::to_string(a));

    // Initial state: most ground state variables get a value at time 0, a few later.
    for (const auto& f : fluents_) {
      const std::vector<std::string> args =
          f.param_type >= 0 ? types_[f.param_type].members : std::vector<std::string>{""};
      for (const auto& arg : args) {
        if (!chance(0.7)) continue;
        if (chance(0.15)) src << "[" << pick(1, 3) << "] ";
        src << sv(f, arg) << " := " << random_constant(f.value_type) << ";\n";
      }
    }

    src << "goal (timepoint t) {\n";
    const int goals = chance(0.3) ? 2 : 1;
    for (int g = 0; g < goals; ++g) {
      const auto& f = fluents_[pick(0, static_cast<int>(fluents_.size()) - 1)];
      const std::string arg = f.param_type >= 0 ? random_member(f.param_type) : "";
      src << "  [t] " << sv(f, arg) << " == " << random_constant(f.value_type) << ";\n";
    }
    src << "};\n";
    out.source = src.str();
    return out;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::string type_name(int t) const { return t < 0 ? "boolean" : types_[t].name; }

  std::string random_member(int t) {
    return types_[t].members[pick(0, static_cast<int>(types_[t].members.size()) - 1)];
  }

  std::string random_constant(int t) { return t < 0 ? (chance(0.5) ? "true" : "false") : random_member(t); }

  static std::string sv(const FluentInfo& f, const std::string& arg) {
    return f.param_type >= 0 ? f.name + "(" + arg + ")" : f.name;
  }

  // A parameter of type t when there is one (usually), a constant otherwise.
  std::string argument(int t, const std::vector<std::pair<std::string, int>>& params) {
    std::vector<std::string> matching;
    for (const auto& [name, type] : params)
      if (type == t) matching.push_back(name);
    if (!matching.empty() && chance(0.8)) return matching[pick(0, static_cast<int>(matching.size()) - 1)];
    return random_constant(t);
  }

  std::string action(const std::string& name) {
    std::vector<std::pair<std::string, int>> params;
    const int count = pick(0, 2);
    for (int i = 0; i < count; ++i) params.push_back({"p" + std::to_string(i), pick(0, static_cast<int>(types_.size()) - 1)});

    std::ostringstream out;
    out << "action " << name << "(";
    for (std::size_t i = 0; i < params.size(); ++i) out << (i ? ", " : "") << types_[params[i].second].name << " " << params[i].first;
    out << ") {\n";
    if (chance(0.2)) out << "  duration :in [1, 2];\n";
    else out << "  duration := " << pick(0, 3) << ";\n";
    if (params.size() == 2 && params[0].second == params[1].second && chance(0.5)) out << "  p0 != p1;\n";

    auto token = [&](const char* annotation, const char* op) {
      const auto& f = fluents_[pick(0, static_cast<int>(fluents_.size()) - 1)];
      const std::string arg = f.param_type >= 0 ? argument(f.param_type, params) : "";
      const std::string value = f.value_type >= 0 ? argument(f.value_type, params) : random_constant(-1);
      out << "  " << annotation << " " << sv(f, arg) << " " << op << " " << value << ";\n";
    };
    static const char* kConditionAt[] = {"[start]", "[end]", "[all]"};
    static const char* kEffectAt[] = {"[start, end]", "[end]", "[start]"};
    const int conditions = pick(0, 2);
    for (int i = 0; i < conditions; ++i) token(kConditionAt[pick(0, 2)], "==");
    const int effects = pick(1, 2);
    for (int i = 0; i < effects; ++i) token(kEffectAt[pick(0, 2)], ":=");
    out << "};\n";
    return out.str();
  }

  std::mt19937 rng_;
  std::vector<TypeInfo> types_;
  std::vector<FluentInfo> fluents_;
};

}  // namespace

TinyInstance random_instance(std::uint32_t seed) { return Generator(seed).run(seed); }

}  // namespace lcp::testing
