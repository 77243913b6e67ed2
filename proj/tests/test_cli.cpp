#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "klconv/catalog.hpp"
#include "klconv/cli.hpp"
#include "klconv/errors.hpp"
#include "klconv/io.hpp"

using namespace klconv;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "klconv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("klconv_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

const std::string kProblems = KLCONV_PROBLEMS_DIR;

}  // namespace

TEST_CASE("grid specs") {
  const auto g = parse_grid_spec("0:1:0.25");
  REQUIRE(g.size() == 5);
  CHECK(g[4] == doctest::Approx(1.0));
  CHECK(parse_grid_spec("2:2:1").size() == 1);
  for (const char* bad : {"0:1", "1:0:0.5", "0:1:0", "0:1:-1", "a:b:c", "-1:1:0.5", "0:1:0.5:2"})
    CHECK_THROWS_AS(parse_grid_spec(bad), InputError);
}

TEST_CASE("config parsing") {
  std::istringstream in("# comment\nrel_tol = 1e-9\nmax_truncation=30\noutput = json\nseed = 11\nfunction.phi = sech\n");
  const RunConfig cfg = parse_config(in);
  CHECK(cfg.quad.rel_tol == 1e-9);
  CHECK(cfg.quad.max_truncation == 30.0);
  CHECK(cfg.output == "json");
  CHECK(cfg.seed == 11);
  REQUIRE(cfg.functions.size() == 1);
  CHECK(cfg.functions[0].second == "sech");
  std::istringstream unknown("not_a_key = 1\n");
  CHECK_THROWS_AS(parse_config(unknown), InputError);
  std::istringstream garbled("rel_tol = fast\n");
  CHECK_THROWS_AS(parse_config(garbled), InputError);
  std::istringstream invalid("rel_tol = -1\n");
  CHECK_THROWS(parse_config(invalid));
}

TEST_CASE("quadrature spec and spectrum JSON round-trip") {
  QuadratureSpec q;
  q.rel_tol = 1e-7;
  q.min_panels = 12;
  CHECK(quadrature_spec_from_json(to_json(q)) == q);
  Spectrum s;
  s.transform_kind = TransformKind::fourier_sine;
  s.source_label = "t";
  s.y_grid = {0.0, 0.1, 1.0 / 3.0};
  s.values = {0.0, -2.5e-17, std::numbers::pi};
  const Spectrum back = spectrum_from_json(nlohmann::json::parse(to_json(s).dump()));
  CHECK(back.y_grid == s.y_grid);
  CHECK(back.values == s.values);
  CHECK(back.transform_kind == s.transform_kind);
}

TEST_CASE("CSV round-trips") {
  Spectrum s;
  s.transform_kind = TransformKind::kontorovich_lebedev;
  s.source_label = "k";
  s.y_grid = {0.0, 0.5, 1.0 / 7.0 + 1.0};
  s.values = {1.0 / 3.0, -1e-300, 2.0};
  std::stringstream io;
  write_spectrum_csv(io, s);
  const Spectrum back = read_spectrum_csv(io, s.transform_kind, "k");
  CHECK(back.y_grid == s.y_grid);
  CHECK(back.values == s.values);

  std::istringstream csv("# produced elsewhere\nx,value\n0,1\n1,0.5\n\n2,0.25\n");
  const RealFunction f = read_function_csv(csv, "table");
  CHECK(f.label() == "table");
  CHECK(f(1.0) == doctest::Approx(0.5));
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_function_csv(empty, "e"), InputError);
  std::istringstream ragged("x,value\n0,1,2\n");
  CHECK_THROWS_AS(read_function_csv(ragged, "r"), InputError);
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("catalog") {
  for (const auto& label : catalog_labels()) {
    CHECK(is_catalog_label(label));
    CHECK(catalog_function(label).label() == label);
  }
  CHECK(catalog_function("gauss")(1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(catalog_function("half_pi_exp")(0.0) == doctest::Approx(std::sqrt(std::numbers::pi / 2.0)));
  CHECK_FALSE(is_catalog_label("nope"));
  CHECK_THROWS_AS(catalog_function("nope"), InputError);
  CHECK_THROWS_AS(resolve_function("/definitely/missing.csv"), InputError);
}

TEST_CASE("transform command") {
  const Run r = run({"transform", "fc", "exp_decay", "--grid", "0:5:0.5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("# schema_version=1 command=transform\n# quadrature={", 0) == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] == "y,value");

  const Run sech = run({"--format", "json", "transform", "fc", "sech", "--grid", "1:1:1"});
  REQUIRE(sech.code == kExitOk);
  const auto j = nlohmann::json::parse(sech.out);
  CHECK(j.at("schema_version") == "1");
  CHECK(j.at("quadrature").at("rel_tol") == 1e-8);
  CHECK(j.at("spectrum").at("values")[0].get<double>() ==
        doctest::Approx(std::sqrt(std::numbers::pi / 2.0) / std::cosh(std::numbers::pi / 2.0)).epsilon(1e-10));

  const Run kl = run({"--format", "json", "transform", "kl", "exp_decay", "--grid", "0:2:1"});
  const auto k = nlohmann::json::parse(kl.out).at("spectrum").at("values");
  CHECK(k[2].get<double>() == doctest::Approx(2.0 * std::numbers::pi / std::sinh(2.0 * std::numbers::pi)).epsilon(1e-9));
}

TEST_CASE("transform of a CSV-sampled function") {
  const fs::path dir = scratch_dir();
  std::string text = "x,value\n";
  for (int i = 0; i <= 4000; ++i) text += format_double(i * 0.01) + "," + format_double(std::exp(-i * 0.01)) + "\n";
  write_file(dir / "e.csv", text);
  const Run r = run({"--format", "json", "transform", "fc", (dir / "e.csv").string(), "--grid", "0:1:1"});
  REQUIRE(r.code == kExitOk);
  const auto v = nlohmann::json::parse(r.out).at("spectrum").at("values");
  CHECK(v[1].get<double>() == doctest::Approx(std::sqrt(2.0 / std::numbers::pi) / 2.0).epsilon(1e-4));
  fs::remove_all(dir);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"transform", "fc", "not_a_label", "--grid", "0:1:0.5"}).code == kExitInputError);
  CHECK(run({"transform", "fc", "exp_decay", "--grid", "0:1"}).code == kExitInputError);
  CHECK(run({"transform", "xx", "exp_decay", "--grid", "0:1:0.5"}).code == kExitInputError);
  CHECK(run({"--format", "xml", "transform", "fc", "exp_decay", "--grid", "0:1:0.5"}).code == kExitInputError);
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"verify", "everything"}).code == kExitInputError);
  CHECK(run({"solve", "third", kProblems + "/basic.json", "--grid", "0:1:0.5"}).code == kExitInputError);
  CHECK(run({"solve", "second", kProblems + "/missing.json", "--grid", "0:1:0.5"}).code == kExitInputError);
  CHECK(run({"--help"}).code == kExitOk);

  const fs::path dir = scratch_dir();
  write_file(dir / "bad.cfg", "unknown_key = 3\n");
  const Run bad_cfg = run({"--config", (dir / "bad.cfg").string(), "transform", "fc", "exp_decay", "--grid", "0:1:0.5"});
  CHECK(bad_cfg.code == kExitInputError);
  CHECK_FALSE(bad_cfg.err.empty());
  write_file(dir / "beta.json", R"({"g1":"exp_decay","g":"half_pi_exp","phi":"exp_decay","xi":"exp_decay","beta":1.5})");
  CHECK(run({"solve", "second", (dir / "beta.json").string(), "--grid", "0:1:0.5"}).code == kExitInputError);
  write_file(dir / "broken.json", "{ not json");
  CHECK(run({"solve", "second", (dir / "broken.json").string(), "--grid", "0:1:0.5"}).code == kExitInputError);
  fs::remove_all(dir);
}

TEST_CASE("config overrides reach the report") {
  const fs::path dir = scratch_dir();
  write_file(dir / "run.cfg", "rel_tol = 1e-9\noutput = json\n");
  const Run r = run({"--config", (dir / "run.cfg").string(), "transform", "fs", "exp_decay", "--grid", "1:1:1"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("quadrature").at("rel_tol") == 1e-9);

  const fs::path out = dir / "report.csv";
  const Run to_file = run({"--output", out.string(), "transform", "fs", "exp_decay", "--grid", "1:1:1"});
  CHECK(to_file.code == kExitOk);
  CHECK(to_file.out.empty());
  std::ifstream in(out);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(data_lines(content.str()).size() == 2);
  fs::remove_all(dir);
}

TEST_CASE("solve command") {
  const Run second = run({"--format", "json", "solve", "second", kProblems + "/basic.json", "--grid", "0:6:0.25"});
  REQUIRE(second.code == kExitOk);
  const auto j = nlohmann::json::parse(second.out);
  CHECK(j.at("schema_version") == "1");
  CHECK(j.at("pass") == true);
  CHECK(j.at("solution").size() == 25);
  CHECK(j.at("spectral_residual").get<double>() <= 1e-3);
  CHECK(second.err.find("PAPER-DISCREPANCY:") != std::string::npos);

  const Run degenerate = run({"--format", "json", "solve", "second", kProblems + "/degenerate.json", "--grid", "0:3:0.5"});
  REQUIRE(degenerate.code == kExitOk);
  const auto d = nlohmann::json::parse(degenerate.out);
  for (std::size_t i = 0; i < d.at("solution").size(); ++i)
    CHECK(std::abs(d.at("solution")[i].get<double>() - d.at("rhs")[i].get<double>()) <= 1e-10);

  const Run first = run({"solve", "first", kProblems + "/basic.json", "--grid", "0:2:0.5"});
  REQUIRE(first.code == kExitOk);
  const auto lines = data_lines(first.out);
  CHECK(lines.front() == "x,f");
  CHECK(lines.size() == 6);

  const fs::path dir = scratch_dir();
  write_file(dir / "flat.json", R"({"g1":"exp_decay","g":"zero","phi":"exp_decay","xi":"exp_decay","beta":0.5})");
  CHECK(run({"solve", "first", (dir / "flat.json").string(), "--grid", "0:1:0.5"}).code == kExitComputeError);
  write_file(dir / "override.cfg", "function.phi = sech\noutput = json\n");
  const Run over = run({"--config", (dir / "override.cfg").string(), "solve", "first", kProblems + "/basic.json", "--grid", "0:1:1"});
  REQUIRE(over.code == kExitOk);
  CHECK(nlohmann::json::parse(over.out).at("problem").at("phi") == "sech");
  fs::remove_all(dir);
}

TEST_CASE("verify command through the executable") {
  const fs::path dir = scratch_dir();
  const std::string cmd = std::string("\"") + KLCONV_CLI_PATH + "\" --format json --output \"" + (dir / "v.json").string() +
                          "\" verify all --seed 8";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == kExitOk);
  std::ifstream in(dir / "v.json");
  const auto j = nlohmann::json::parse(in);
  CHECK(j.at("pass") == true);
  CHECK(j.at("inequalities").at("errors").empty());
  CHECK(j.at("identities").size() > 50);
  CHECK(j.at("inequalities").contains("slack_note"));
  fs::remove_all(dir);
}
