#include "lcp/cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "lcp/anml.h"
#include "lcp/planner.h"
#include "lcp/problem_json.h"
#include "lcp/smtlib.h"
#include "lcp/validator.h"

namespace lcp {

namespace {

struct Failure {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Problem load_problem(const std::string& path, std::ostream& err) {
  const auto result = parse_problem(read_file(path));
  if (!result.ok()) {
    for (const auto& d : result.diagnostics) err << path << ":" << format_diagnostic(d) << "\n";
    throw Failure{};
  }
  return *result.problem;
}

int parse_object_count(const std::string& spec) {
  std::string digits = spec;
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  int n = 0;
  std::istringstream in(digits);
  if (digits.empty() || !(in >> n) || !in.eof() || n < 0) throw Failure{"--objects expects +N, got '" + spec + "'"};
  return n;
}

struct Options {
  std::string input;
  std::string plan_file;
  std::string format = "text";
  int k_max = -1;
  double timeout = 60;
  double deadline = 600;
  std::string solver = SolverConfig::default_command();
  std::string emit_dir;
  bool no_symmetry = false;
  bool no_pruning = false;
  std::int64_t horizon = -1;
  std::string objects;
  bool verbose = false;
};

EncodeOptions encode_options(const Options& o) {
  EncodeOptions e;
  e.symmetry = !o.no_symmetry;
  e.pruning = !o.no_pruning;
  if (o.horizon >= 0) e.horizon = o.horizon;
  return e;
}

void add_encoding_flags(CLI::App* cmd, Options& o) {
  cmd->add_flag("--no-symmetry", o.no_symmetry, "Omit the symmetry-breaking constraints");
  cmd->add_flag("--no-pruning", o.no_pruning, "Keep coherence/support pairs on distinct fluents");
  cmd->add_option("--horizon", o.horizon, "Upper bound on every timepoint")->check(CLI::NonNegativeNumber);
}

nlohmann::ordered_json depth_to_json(const DepthReport& r) {
  nlohmann::ordered_json j;
  j["k"] = r.depth;
  j["variables"] = r.variables;
  j["assertions"] = r.assertions;
  j["verdict"] = r.verdict;
  j["seconds"] = r.seconds;
  return j;
}

int plan_command(const Options& o, std::ostream& out, std::ostream& err) {
  const Problem p = load_problem(o.input, err);
  LcpOptions options;
  options.solver.command = o.solver;
  options.solver.timeout_seconds = o.timeout;
  options.solver.deadline_seconds = o.deadline;
  options.solver.k_max = o.k_max < 0 ? 10 : o.k_max;
  options.encoding = encode_options(o);
  if (!o.emit_dir.empty()) options.emit_dir = o.emit_dir;
  auto depths = nlohmann::ordered_json::array();
  options.on_depth = [&](const DepthReport& r) {
    depths.push_back(depth_to_json(r));
    if (o.verbose)
      err << "depth " << r.depth << ": " << r.verdict << " (" << r.variables << " variables, " << r.assertions
          << " assertions, " << std::fixed << std::setprecision(3) << r.seconds << " s)\n";
  };

  const auto started = std::chrono::steady_clock::now();
  const SolveOutcome outcome = lcp(p, options);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  nlohmann::ordered_json j;
  std::ostringstream text;
  int code = 2;
  if (const auto* s = std::get_if<Solution>(&outcome)) {
    j["status"] = "solution";
    j["depth"] = s->depth;
    j["plan"] = plan_to_json(s->plan);
    text << "solution at depth " << s->depth << "\n" << render_plan(s->plan);
    code = 0;
  } else if (const auto* e = std::get_if<Exhausted>(&outcome)) {
    j["status"] = "exhausted";
    j["depth"] = e->k_max;
    text << "no plan up to depth " << e->k_max << "\n";
    code = 1;
  } else if (const auto* t = std::get_if<TimedOut>(&outcome)) {
    j["status"] = "timeout";
    j["depth"] = t->depth;
    text << "timed out at depth " << t->depth << "\n";
  } else {
    const auto& f = std::get<SolverError>(outcome);
    j["status"] = "error";
    j["depth"] = f.depth;
    j["message"] = f.message;
    err << "solver error at depth " << f.depth << ": " << f.message << "\n";
    text << "solver error at depth " << f.depth << "\n";
  }
  j["seconds"] = seconds;
  j["depths"] = std::move(depths);
  if (o.format == "json") out << j.dump(2) << "\n";
  else out << text.str() << "time: " << std::fixed << std::setprecision(3) << seconds << " s\n";
  return code;
}

int validate_command(const Options& o, std::ostream& out, std::ostream& err) {
  const Problem p = load_problem(o.input, err);
  Plan plan;
  try {
    plan = plan_from_json(nlohmann::json::parse(read_file(o.plan_file)));
  } catch (const nlohmann::json::exception& e) {
    throw Failure{"malformed plan " + o.plan_file + ": " + e.what()};
  }
  const auto report = validate_plan(p, plan);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["valid"] = report.valid();
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) j["violations"].push_back({{"kind", to_string(v.kind)}, {"message", v.message}});
    out << j.dump(2) << "\n";
  } else if (report.valid()) {
    out << "valid\n";
  } else {
    out << "invalid: " << report.violations.size() << " violation(s)\n";
    for (const auto& v : report.violations) out << "  " << to_string(v.kind) << ": " << v.message << "\n";
  }
  return report.valid() ? 0 : 1;
}

int encode_command(const Options& o, std::ostream& out, std::ostream& err) {
  const Problem p = load_problem(o.input, err);
  const int k_max = o.k_max < 0 ? 2 : o.k_max;
  for (int k = 0; k <= k_max; ++k) {
    const std::string script = emit_smtlib(encode(gen_problem(p, k), encode_options(o)));
    if (o.emit_dir.empty()) {
      out << "; depth " << k << "\n" << script;
      continue;
    }
    std::filesystem::create_directories(o.emit_dir);
    const auto path = std::filesystem::path(o.emit_dir) / ("depth_" + std::to_string(k) + ".smt2");
    std::ofstream file(path, std::ios::binary);
    file << script;
    if (!file) throw Failure{"cannot write " + path.string()};
    out << path.string() << "\n";
  }
  return 0;
}

int stats_command(const Options& o, std::ostream& out, std::ostream& err) {
  Problem p = load_problem(o.input, err);
  if (!o.objects.empty()) inject_objects(p, parse_object_count(o.objects));
  const int k_max = o.k_max < 0 ? 4 : o.k_max;
  static constexpr Tag kTags[] = {Tag::Domain, Tag::Consistency, Tag::Coherence, Tag::Support, Tag::Symmetry};
  auto rows = nlohmann::ordered_json::array();
  for (int k = 1; k <= k_max; ++k) {
    const Formula f = encode(gen_problem(p, k), encode_options(o));
    nlohmann::ordered_json row;
    row["k"] = k;
    row["variables"] = f.variables.size();
    row["assertions"] = f.assertions.size();
    for (const auto tag : kTags) row[to_string(tag)] = f.count(tag);
    rows.push_back(std::move(row));
  }
  if (o.format == "json") {
    out << nlohmann::ordered_json{{"rows", rows}}.dump(2) << "\n";
    return 0;
  }
  out << std::setw(3) << "k" << std::setw(11) << "variables" << std::setw(12) << "assertions";
  for (const auto tag : kTags) out << std::setw(13) << to_string(tag);
  out << "\n";
  for (const auto& row : rows) {
    out << std::setw(3) << row["k"].get<int>() << std::setw(11) << row["variables"].get<std::size_t>()
        << std::setw(12) << row["assertions"].get<std::size_t>();
    for (const auto tag : kTags) out << std::setw(13) << row[to_string(tag)].get<std::size_t>();
    out << "\n";
  }
  return 0;
}

int parse_command(const Options& o, std::ostream& out, std::ostream& err) {
  out << problem_to_json(load_problem(o.input, err)).dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lifted constraint-based temporal planner", "lcp"};
  app.require_subcommand(1);
  Options o;

  auto* plan = app.add_subcommand("plan", "Search for a plan by iterative deepening");
  plan->add_option("problem", o.input, "ANML problem file")->required();
  plan->add_option("--kmax", o.k_max, "Largest depth to try (default 10)")->check(CLI::NonNegativeNumber);
  plan->add_option("--timeout", o.timeout, "Seconds allowed per solver call")->check(CLI::PositiveNumber);
  plan->add_option("--deadline", o.deadline, "Seconds allowed for the whole search")->check(CLI::PositiveNumber);
  plan->add_option("--solver", o.solver, "Solver command line (default $LCP_SOLVER or z3 -in -smt2)");
  plan->add_option("--emit-smt", o.emit_dir, "Write each depth's script to DIR/depth_<k>.smt2");
  plan->add_flag("-v,--verbose", o.verbose, "Report every depth on stderr");
  add_encoding_flags(plan, o);

  auto* validate = app.add_subcommand("validate", "Check a plan against a problem");
  validate->add_option("problem", o.input, "ANML problem file")->required();
  validate->add_option("plan", o.plan_file, "Plan JSON file")->required();

  auto* encode_cmd = app.add_subcommand("encode", "Write the SMT-LIB encodings of depths 0..kmax");
  encode_cmd->add_option("problem", o.input, "ANML problem file")->required();
  encode_cmd->add_option("--kmax", o.k_max, "Largest depth (default 2)")->check(CLI::NonNegativeNumber);
  encode_cmd->add_option("--emit-smt", o.emit_dir, "Output directory (default: standard output)");
  add_encoding_flags(encode_cmd, o);

  auto* stats = app.add_subcommand("stats", "Encoding size for depths 1..kmax");
  stats->add_option("problem", o.input, "ANML problem file")->required();
  stats->add_option("--kmax", o.k_max, "Largest depth (default 4)")->check(CLI::NonNegativeNumber);
  stats->add_option("--objects", o.objects, "Add N unused objects to every object type (+N)");
  add_encoding_flags(stats, o);

  auto* parse = app.add_subcommand("parse", "Print the canonical JSON of a problem");
  parse->add_option("problem", o.input, "ANML problem file")->required();

  for (auto* cmd : {plan, validate, stats})
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      err << "run 'lcp " << sub->get_name() << " --help' for usage\n";
    return 2;
  }

  try {
    if (plan->parsed()) return plan_command(o, out, err);
    if (validate->parsed()) return validate_command(o, out, err);
    if (encode_cmd->parsed()) return encode_command(o, out, err);
    if (stats->parsed()) return stats_command(o, out, err);
    return parse_command(o, out, err);
  } catch (const Failure& f) {
    if (!f.message.empty()) err << "lcp: " << f.message << "\n";
  } catch (const std::exception& e) {
    err << "lcp: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace lcp
