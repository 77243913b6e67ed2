#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "klconv/function.hpp"
#include "klconv/quadrature.hpp"
#include "klconv/transforms.hpp"

namespace klconv {

inline constexpr const char* kSchemaVersion = "1";

/// Shortest round-trip decimal text ("%.17g").
std::string format_double(double v);

/// Reads a CSV with header "x,value" into a sampled RealFunction labelled by the path.
/// Lines starting with '#' are skipped.
RealFunction read_function_csv(const std::string& path);
RealFunction read_function_csv(std::istream& in, std::string label);

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum);
Spectrum read_spectrum_csv(std::istream& in, TransformKind kind, std::string source_label);

nlohmann::json to_json(const QuadratureSpec& spec);
QuadratureSpec quadrature_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Spectrum& spectrum);
Spectrum spectrum_from_json(const nlohmann::json& j);

/// Parses "a:b:h" into a, a+h, ..., b (b included within h/2). Throws InputError.
std::vector<double> parse_grid_spec(const std::string& text);

/// Effective run configuration. Config files are flat "key = value" lines;
/// '#' starts a comment. Keys: every QuadratureSpec field, output (csv|json),
/// output_path, seed, and function.<role> = <label>.
struct RunConfig {
  QuadratureSpec quad;
  std::string output = "csv";
  std::string output_path;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> functions;
};

/// Throws InputError on unknown keys or unparsable values.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

}  // namespace klconv
