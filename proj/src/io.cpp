#include "klconv/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "klconv/errors.hpp"

namespace klconv {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  try {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw InputError("cannot parse " + what + " '" + t + "' as a number");
  }
}

std::int64_t parse_integer(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw InputError("cannot parse " + what + " '" + t + "' as an integer");
  return v;
}

// Reads two-column numeric CSV rows after a header line; '#' lines are comments.
void read_pairs(std::istream& in, std::vector<double>& a, std::vector<double>& b, const std::string& what) {
  std::string line;
  std::size_t row = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++row;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InputError(what + ": row " + std::to_string(row) + " has no comma");
    a.push_back(parse_double(line.substr(0, comma), what));
    b.push_back(parse_double(line.substr(comma + 1), what));
  }
  if (!header) throw InputError(what + ": empty input");
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

RealFunction read_function_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_function_csv(in, path);
}

RealFunction read_function_csv(std::istream& in, std::string label) {
  std::vector<double> xs, vs;
  read_pairs(in, xs, vs, label);
  try {
    return RealFunction::sampled(std::move(label), std::move(xs), std::move(vs));
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum) {
  out << "y,value\n";
  for (std::size_t i = 0; i < spectrum.y_grid.size(); ++i)
    out << format_double(spectrum.y_grid[i]) << ',' << format_double(spectrum.values[i]) << '\n';
}

Spectrum read_spectrum_csv(std::istream& in, TransformKind kind, std::string source_label) {
  Spectrum s;
  s.transform_kind = kind;
  s.source_label = std::move(source_label);
  read_pairs(in, s.y_grid, s.values, "spectrum csv");
  s.validate();
  return s;
}

nlohmann::json to_json(const QuadratureSpec& spec) {
  return {{"abs_tol", spec.abs_tol},
          {"rel_tol", spec.rel_tol},
          {"truncation_threshold", spec.truncation_threshold},
          {"max_truncation", spec.max_truncation},
          {"panels_per_unit", spec.panels_per_unit},
          {"nodes_per_panel", spec.nodes_per_panel},
          {"oscillation_panels_per_period", spec.oscillation_panels_per_period},
          {"min_panels", spec.min_panels}};
}

QuadratureSpec quadrature_spec_from_json(const nlohmann::json& j) {
  QuadratureSpec s;
  try {
    s.abs_tol = j.value("abs_tol", s.abs_tol);
    s.rel_tol = j.value("rel_tol", s.rel_tol);
    s.truncation_threshold = j.value("truncation_threshold", s.truncation_threshold);
    s.max_truncation = j.value("max_truncation", s.max_truncation);
    s.panels_per_unit = j.value("panels_per_unit", s.panels_per_unit);
    s.nodes_per_panel = j.value("nodes_per_panel", s.nodes_per_panel);
    s.oscillation_panels_per_period = j.value("oscillation_panels_per_period", s.oscillation_panels_per_period);
    s.min_panels = j.value("min_panels", s.min_panels);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("quadrature spec: ") + e.what());
  }
  s.validate();
  return s;
}

nlohmann::json to_json(const Spectrum& spectrum) {
  return {{"transform_kind", to_string(spectrum.transform_kind)},
          {"source_label", spectrum.source_label},
          {"y", spectrum.y_grid},
          {"values", spectrum.values}};
}

Spectrum spectrum_from_json(const nlohmann::json& j) {
  Spectrum s;
  try {
    s.transform_kind = transform_kind_from_string(j.at("transform_kind").get<std::string>());
    s.source_label = j.value("source_label", "");
    s.y_grid = j.at("y").get<std::vector<double>>();
    s.values = j.at("values").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("spectrum json: ") + e.what());
  }
  s.validate();
  return s;
}

std::vector<double> parse_grid_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw InputError("grid spec must be a:b:h, got '" + text + "'");
  const double a = parse_double(parts[0], "grid start");
  const double b = parse_double(parts[1], "grid stop");
  const double h = parse_double(parts[2], "grid step");
  if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || b < a)
    throw InputError("grid spec needs finite 0 <= a <= b, got '" + text + "'");
  if (!(h > 0.0) || !std::isfinite(h)) throw InputError("grid step must be > 0, got '" + text + "'");
  return uniform_grid(a, b, h);
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    QuadratureSpec& q = cfg.quad;
    if (key == "abs_tol") q.abs_tol = parse_double(value, key);
    else if (key == "rel_tol") q.rel_tol = parse_double(value, key);
    else if (key == "truncation_threshold") q.truncation_threshold = parse_double(value, key);
    else if (key == "max_truncation") q.max_truncation = parse_double(value, key);
    else if (key == "panels_per_unit") q.panels_per_unit = static_cast<int>(parse_integer(value, key));
    else if (key == "nodes_per_panel") q.nodes_per_panel = static_cast<int>(parse_integer(value, key));
    else if (key == "oscillation_panels_per_period")
      q.oscillation_panels_per_period = static_cast<int>(parse_integer(value, key));
    else if (key == "min_panels") q.min_panels = static_cast<int>(parse_integer(value, key));
    else if (key == "output") {
      if (value != "csv" && value != "json") throw InputError("output must be csv or json");
      cfg.output = value;
    } else if (key == "output_path") cfg.output_path = value;
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_integer(value, key));
    else if (key.rfind("function.", 0) == 0 && key.size() > 9) cfg.functions.emplace_back(key.substr(9), value);
    else throw InputError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  try {
    cfg.quad.validate();
  } catch (const DomainError& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config '" + path + "'");
  return parse_config(in);
}

}  // namespace klconv
