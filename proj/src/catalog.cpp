#include "klconv/catalog.hpp"

#include <cmath>
#include <filesystem>
#include <numbers>

#include "klconv/errors.hpp"
#include "klconv/io.hpp"

namespace klconv {

std::vector<std::string> catalog_labels() {
  return {"zero", "exp_decay", "exp2_decay", "t_exp", "gauss", "sech", "sech3", "poly_decay", "half_pi_exp"};
}

bool is_catalog_label(const std::string& label) {
  for (const auto& l : catalog_labels())
    if (l == label) return true;
  return false;
}

RealFunction catalog_function(const std::string& label) {
  if (label == "zero") return RealFunction();
  if (label == "exp_decay")
    return RealFunction::closed_form(label, [](double x) { return std::exp(-x); }, 1.0);
  if (label == "exp2_decay")
    return RealFunction::closed_form(label, [](double x) { return std::exp(-2.0 * x); }, 2.0);
  if (label == "t_exp")
    return RealFunction::closed_form(label, [](double x) { return x * std::exp(-x); }, 1.0);
  if (label == "gauss")
    return RealFunction::closed_form(label, [](double x) { return std::exp(-x * x); });
  if (label == "sech")
    return RealFunction::closed_form(label, [](double x) { return 1.0 / std::cosh(x); }, 1.0);
  if (label == "sech3")
    return RealFunction::closed_form(
        label, [](double x) { return std::pow(1.0 / std::cosh(x), 3); }, 3.0);
  if (label == "poly_decay")
    return RealFunction::closed_form(label, [](double x) { return 1.0 / std::pow(1.0 + x, 3); });
  if (label == "half_pi_exp") {
    const double c = std::sqrt(std::numbers::pi / 2.0);
    return RealFunction::closed_form(label, [c](double x) { return c * std::exp(-x); }, 1.0);
  }
  throw InputError("unknown function label '" + label + "'");
}

RealFunction resolve_function(const std::string& label_or_path) {
  if (is_catalog_label(label_or_path)) return catalog_function(label_or_path);
  if (std::filesystem::is_regular_file(label_or_path)) return read_function_csv(label_or_path);
  throw InputError("'" + label_or_path + "' is neither a catalog label nor a CSV sample file");
}

std::vector<std::string> inequality_catalog() {
  return {"exp_decay", "t_exp", "gauss", "sech", "exp2_decay", "poly_decay"};
}

std::vector<std::string> cross_route_catalog() {
  return {"exp_decay", "t_exp", "gauss", "sech", "exp2_decay"};
}

}  // namespace klconv
