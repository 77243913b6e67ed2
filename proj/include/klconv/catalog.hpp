#pragma once

#include <string>
#include <vector>

#include "klconv/function.hpp"

namespace klconv {

/// Built-in functions: zero, exp_decay, exp2_decay, t_exp, gauss, sech, sech3,
/// poly_decay, half_pi_exp.
std::vector<std::string> catalog_labels();

bool is_catalog_label(const std::string& label);

/// Throws InputError for an unknown label.
RealFunction catalog_function(const std::string& label);

/// Catalog label, or else a path to a CSV sample file (columns x, value).
/// Throws InputError when neither resolves.
RealFunction resolve_function(const std::string& label_or_path);

/// The six functions the inequality suite pairs up.
std::vector<std::string> inequality_catalog();

/// The five functions used for cross-route and factorization checks.
std::vector<std::string> cross_route_catalog();

}  // namespace klconv
