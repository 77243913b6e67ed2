#include "klconv/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "klconv/catalog.hpp"
#include "klconv/errors.hpp"
#include "klconv/inequalities.hpp"
#include "klconv/io.hpp"
#include "klconv/solver.hpp"
#include "klconv/transforms.hpp"
#include "klconv/verify.hpp"

namespace klconv {

namespace {

using nlohmann::json;

struct Options {
  std::string config_path;
  std::string format;
  std::string output_path;

  std::string transform_kind;
  std::string transform_label;
  std::string transform_grid;

  std::string verify_suite;
  std::optional<std::uint64_t> seed;

  std::string solve_kind;
  std::string problem_path;
  std::string solve_grid;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void csv_preamble(std::ostream& os, const std::string& command, const QuadratureSpec& quad) {
  os << "# schema_version=" << kSchemaVersion << " command=" << command << '\n';
  os << "# quadrature=" << to_json(quad).dump() << '\n';
}

json base_report(const std::string& command, const QuadratureSpec& quad) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"quadrature", to_json(quad)}};
}

// ---------------------------------------------------------------- transform

std::string transform_report(const Options& opt, const RunConfig& cfg) {
  TransformKind kind;
  if (opt.transform_kind == "fc") kind = TransformKind::fourier_cosine;
  else if (opt.transform_kind == "fs") kind = TransformKind::fourier_sine;
  else if (opt.transform_kind == "kl") kind = TransformKind::kontorovich_lebedev;
  else throw InputError("transform kind must be fc, fs or kl");
  const RealFunction f = resolve_function(opt.transform_label);
  const std::vector<double> grid = parse_grid_spec(opt.transform_grid);
  const Spectrum spectrum = spectrum_on_grid(kind, f, grid, cfg.quad);

  std::ostringstream os;
  if (cfg.output == "json") {
    json report = base_report("transform", cfg.quad);
    report["spectrum"] = to_json(spectrum);
    os << report.dump(2) << '\n';
  } else {
    csv_preamble(os, "transform", cfg.quad);
    write_spectrum_csv(os, spectrum);
  }
  return os.str();
}

// ---------------------------------------------------------------- verify

json to_json(const IdentityCheck& c) {
  return {{"group", c.group}, {"instance", c.instance}, {"metric", c.metric}, {"value", c.value},
          {"bound", c.bound}, {"pass", c.pass},         {"details", c.details}};
}

json to_json(const InequalityReport& r) {
  return {{"id", to_string(r.id)},
          {"mode", to_string(r.mode)},
          {"functions", r.functions},
          {"parameters", r.parameters},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"ratio", r.ratio},
          {"pass", r.pass ? json(*r.pass) : json(nullptr)},
          {"slack", r.slack},
          {"audit", r.audit}};
}

std::string describe_instance(const InequalityReport& r) {
  std::string s;
  for (const auto& [role, label] : r.functions) s += role + "=" + label + " ";
  for (const auto& [name, v] : r.parameters) s += name + "=" + format_double(v) + " ";
  if (!s.empty()) s.pop_back();
  return s;
}

struct VerifyOutcome {
  std::string text;
  int code = kExitOk;
};

VerifyOutcome verify_report(const Options& opt, const RunConfig& cfg, std::ostream& err) {
  const std::string& suite = opt.verify_suite;
  if (suite != "identities" && suite != "inequalities" && suite != "all")
    throw InputError("verify suite must be identities, inequalities or all");
  const std::uint64_t seed = opt.seed.value_or(cfg.seed);
  const bool run_identities = suite != "inequalities";
  const bool run_inequalities = suite != "identities";

  IdentitySuite identities;
  if (run_identities) identities = run_identity_suite(cfg.quad, seed);
  SuiteResult inequalities;
  if (run_inequalities)
    inequalities = run_suite(all_inequality_ids(), ordered_pairs(inequality_catalog()), ParameterGrid{}, cfg.quad);

  VerifyOutcome outcome;
  const bool ok = identities.all_pass() && inequalities.all_strict_pass();
  if (!inequalities.errors.empty()) outcome.code = kExitComputeError;
  else if (!ok) outcome.code = kExitCheckFailed;
  for (const auto& e : inequalities.errors)
    err << "error: " << to_string(e.id) << " [" << e.instance << "]: " << e.message << '\n';

  std::ostringstream os;
  if (cfg.output == "json") {
    json report = base_report("verify", cfg.quad);
    report["suite"] = suite;
    report["seed"] = seed;
    if (run_identities) {
      json checks = json::array();
      for (const auto& c : identities.checks) checks.push_back(to_json(c));
      report["identities"] = checks;
    }
    if (run_inequalities) {
      json reports = json::array();
      for (const auto& r : inequalities.reports) reports.push_back(to_json(r));
      json errors = json::array();
      for (const auto& e : inequalities.errors)
        errors.push_back({{"id", to_string(e.id)}, {"instance", e.instance}, {"message", e.message}});
      report["inequalities"] = {
          {"slack_note", "strict checks pass at ratio <= 1 + slack; the slack absorbs quadrature error only"},
          {"reports", reports},
          {"errors", errors}};
    }
    report["pass"] = ok && inequalities.errors.empty();
    os << report.dump(2) << '\n';
  } else {
    csv_preamble(os, "verify " + suite + " seed=" + std::to_string(seed), cfg.quad);
    os << "section,name,instance,value,bound,ratio,status\n";
    for (const auto& c : identities.checks)
      os << "identity," << csv_field(c.group) << ',' << csv_field(c.instance) << ',' << format_double(c.value)
         << ',' << format_double(c.bound) << ",," << (c.pass ? "pass" : "fail") << '\n';
    for (const auto& r : inequalities.reports)
      os << "inequality," << to_string(r.id) << ',' << csv_field(describe_instance(r)) << ','
         << format_double(r.lhs) << ',' << format_double(r.rhs) << ',' << format_double(r.ratio) << ','
         << (r.pass ? (*r.pass ? "pass" : "fail") : "ratio_only") << '\n';
    for (const auto& e : inequalities.errors)
      os << "error," << to_string(e.id) << ',' << csv_field(e.instance) << ",,,," << csv_field(e.message) << '\n';
  }
  outcome.text = os.str();
  return outcome;
}

// ---------------------------------------------------------------- solve

RealFunction resolve_role(const std::string& value, const std::filesystem::path& base_dir) {
  if (is_catalog_label(value) || std::filesystem::is_regular_file(value)) return resolve_function(value);
  const auto relative = base_dir / value;
  if (std::filesystem::is_regular_file(relative)) return resolve_function(relative.string());
  return resolve_function(value);
}

struct SolveOutcome {
  std::string text;
  int code = kExitOk;
};

SolveOutcome solve_report(const Options& opt, const RunConfig& cfg, std::ostream& err) {
  const bool second = opt.solve_kind == "second";
  if (!second && opt.solve_kind != "first") throw InputError("solve kind must be first or second");

  std::ifstream in(opt.problem_path);
  if (!in) throw InputError("cannot open problem file '" + opt.problem_path + "'");
  json problem;
  try {
    problem = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("problem file: ") + e.what());
  }
  if (!problem.is_object()) throw InputError("problem file must hold a JSON object");

  std::map<std::string, std::string> roles;
  for (const char* role : {"g1", "g", "phi", "xi"})
    if (problem.contains(role)) {
      if (!problem[role].is_string()) throw InputError(std::string("problem role '") + role + "' must be a string");
      roles[role] = problem[role].get<std::string>();
    }
  for (const auto& [role, label] : cfg.functions) roles[role] = label;
  double beta = 0.5;
  if (problem.contains("beta")) {
    if (!problem["beta"].is_number()) throw InputError("problem beta must be a number");
    beta = problem["beta"].get<double>();
  }
  if (!(beta > 0.0 && beta < 1.0)) throw InputError("problem beta must lie in (0, 1)");

  const std::vector<std::string> needed = second ? std::vector<std::string>{"g1", "phi", "xi"}
                                                 : std::vector<std::string>{"g", "phi", "xi"};
  const auto base_dir = std::filesystem::path(opt.problem_path).parent_path();
  std::map<std::string, RealFunction> fns;
  for (const auto& role : needed) {
    const auto it = roles.find(role);
    if (it == roles.end()) throw InputError("problem file lacks role '" + role + "'");
    fns[role] = resolve_role(it->second, base_dir);
  }
  const std::vector<double> grid = parse_grid_spec(opt.solve_grid);

  const SolveReport report =
      second ? solve_second_kind(SecondKindProblem{fns["g1"], fns["phi"], fns["xi"], beta, cfg.quad}, grid)
             : solve_first_kind(FirstKindProblem{fns["g"], fns["phi"], fns["xi"], beta, cfg.quad}, grid);
  for (const auto& line : report.discrepancies) err << line << '\n';

  std::ostringstream os;
  if (cfg.output == "json") {
    json j = base_report("solve", cfg.quad);
    json used = json::object();
    for (const auto& role : needed) used[role] = roles[role];
    used["beta"] = beta;
    j["kind"] = report.kind;
    j["problem"] = used;
    j["x"] = report.x_grid;
    j["solution"] = report.solution;
    j["rhs"] = report.rhs_samples;
    if (second) j["ell_spectrum"] = to_json(report.ell_spectrum);
    else j["psi_aux"] = report.psi_samples;
    j["residual_grid"] = report.residual_grid;
    j["residual"] = report.residual;
    j["spectral_residual"] = report.spectral_residual;
    j["tolerance"] = report.tolerance;
    if (!second) {
      j["small_y_abs_residual"] = report.small_y_abs_residual;
      j["small_y_tolerance"] = report.small_y_tolerance;
    }
    j["l1_estimate"] = {{"lhs", report.l1_estimate_lhs},
                        {"rhs", report.l1_estimate_rhs},
                        {"holds", report.l1_estimate_holds}};
    j["norms"] = report.norms;
    j["discrepancies"] = report.discrepancies;
    j["pass"] = report.pass;
    os << j.dump(2) << '\n';
  } else {
    csv_preamble(os, "solve " + report.kind, cfg.quad);
    os << "x,f\n";
    for (std::size_t i = 0; i < report.x_grid.size(); ++i)
      os << format_double(report.x_grid[i]) << ',' << format_double(report.solution[i]) << '\n';
  }
  return {os.str(), report.pass ? kExitOk : kExitCheckFailed};
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
  if (!file) throw InputError("failed writing '" + path + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized convolution toolkit: transforms, verification suites and equation solvers", "klconv"};
  Options opt;
  app.add_option("--config", opt.config_path, "flat key = value configuration file");
  app.add_option("--format", opt.format, "report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", opt.output_path, "report file (default: standard output)");
  app.require_subcommand(1);

  auto* transform = app.add_subcommand("transform", "sample F_c, F_s or the KL transform on a grid");
  transform->fallthrough();
  transform->add_option("kind", opt.transform_kind, "fc, fs or kl")->required();
  transform->add_option("function", opt.transform_label, "catalog label or CSV file (x,value)")->required();
  transform->add_option("--grid", opt.transform_grid, "y grid a:b:h")->required();

  auto* verify = app.add_subcommand("verify", "run the identity and inequality suites");
  verify->fallthrough();
  verify->add_option("suite", opt.verify_suite, "identities, inequalities or all")->required();
  verify->add_option("--seed", opt.seed, "seed for randomized spot checks");

  auto* solve = app.add_subcommand("solve", "solve a first- or second-kind equation and certify it");
  solve->fallthrough();
  solve->add_option("kind", opt.solve_kind, "first or second")->required();
  solve->add_option("problem", opt.problem_path, "problem JSON file")->required();
  solve->add_option("--grid", opt.solve_grid, "x grid a:b:h")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    RunConfig cfg = opt.config_path.empty() ? RunConfig{} : load_config(opt.config_path);
    if (!opt.format.empty()) cfg.output = opt.format;
    if (!opt.output_path.empty()) cfg.output_path = opt.output_path;

    int code = kExitOk;
    std::string text;
    if (transform->parsed()) {
      text = transform_report(opt, cfg);
    } else if (verify->parsed()) {
      auto outcome = verify_report(opt, cfg, err);
      text = std::move(outcome.text);
      code = outcome.code;
    } else {
      auto outcome = solve_report(opt, cfg, err);
      text = std::move(outcome.text);
      code = outcome.code;
    }
    emit(text, cfg.output_path, out);
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputeError;
  }
}

}  // namespace klconv
