#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "klconv/function.hpp"
#include "klconv/inequalities.hpp"
#include "klconv/quadrature.hpp"

namespace klconv {

/// One identity or bound check: passes when value <= bound.
struct IdentityCheck {
  std::string group;     // e.g. "closure", "factorization"
  std::string instance;  // parameters or function labels
  std::string metric;    // what `value` measures
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
  std::map<std::string, double> details;
};

struct IdentitySuite {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

/// The five (f, g) pairs of the cross-route and factorization checks.
std::vector<LabelPair> identity_pairs();

/// x-points at which the direct and Parseval routes are compared.
std::vector<double> cross_route_points();

/// Largest |direct - spectral| / max(1e-4, 1e-3 |spectral|) over `xs`; <= 1 means the routes agree.
struct CrossRouteResult {
  std::vector<double> x;
  std::vector<double> direct;
  std::vector<double> spectral;
  double max_scaled_gap = 0.0;
  double max_abs_gap = 0.0;
};
CrossRouteResult cross_route_check(const RealFunction& f, const RealFunction& g, const std::vector<double>& xs,
                                   const QuadratureSpec& quad, double beta = 0.5);

/// f / ||f||_2 as a closed-form function labelled "<label>/L2".
RealFunction l2_normalized(const RealFunction& f, const QuadratureSpec& quad);

/// Runs every identity, kernel bound, Bessel bound, gamma-integral audit and
/// solver certification. `seed` drives the random coefficients of the
/// bilinearity spot check; pass/fail never depends on it.
IdentitySuite run_identity_suite(const QuadratureSpec& quad, std::uint64_t seed);

}  // namespace klconv
