#pragma once

#include <limits>
#include <string>
#include <variant>

#include "klconv/function.hpp"
#include "klconv/quadrature.hpp"

namespace klconv {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Weight 1.
struct PlainWeight {};

/// Weight K0(beta x) x^alpha with 0 < beta <= 1.
struct BesselPowerWeight {
  double alpha = 0.0;
  double beta = 1.0;
};

/// Weight x^gamma1 exp(-gamma2 x) with gamma1 > -1, gamma2 > 0.
struct GammaExpWeight {
  double gamma1 = 0.0;
  double gamma2 = 1.0;
};

/// Weight rho(x) for a caller-supplied positive rho.
struct CustomWeight {
  RealFunction rho;
};

using Weight = std::variant<PlainWeight, BesselPowerWeight, GammaExpWeight, CustomWeight>;

struct WeightedNormSpec {
  double p = 1.0;  // >= 1, or kInfinity
  Weight weight = PlainWeight{};

  /// Throws DomainError when p < 1 or a weight parameter is out of range.
  void validate() const;

  /// Short human-readable space name, e.g. "L_2", "L_1^{0,0.5}", "L_3^{1,2}(gamma)".
  std::string describe() const;
};

double weight_value(const Weight& weight, double x, const QuadratureSpec& quad = {});

/// (integral of |f|^p w)^{1/p}, or for p = inf the largest |f| on the grid
/// 0, 0.01, ..., max_truncation. Weights that are singular at 0 (Bessel
/// weights, gamma weights with gamma1 < 0) use the graded rule.
///
/// Throws NonFiniteNorm when the integral overflows.
double weighted_norm(const RealFunction& f, const WeightedNormSpec& spec,
                     const QuadratureSpec& quad = {});

/// Integral of x^gamma1 exp(-gamma2 x) over [0, inf) by quadrature. The
/// truncation cap is widened to cover slow decay (small gamma2).
double gamma_weight_integral(double gamma1, double gamma2, const QuadratureSpec& quad = {});

/// Gamma(gamma1 + 1) / gamma2^(gamma1 + 1).
double gamma_weight_closed_form(double gamma1, double gamma2);

/// gamma2^(1 - gamma1) Gamma(gamma1 + 1), the alternative constant kept for audit output.
double gamma_weight_alternative_form(double gamma1, double gamma2);

struct MembershipReport {
  std::string function_label;
  std::string space;
  double norm = 0.0;
  bool member = false;  // norm finite
};

/// Evaluates the norm and reports whether it is finite; never throws for
/// an infinite or overflowing norm.
MembershipReport check_membership(const RealFunction& f, const WeightedNormSpec& spec,
                                  const QuadratureSpec& quad = {});

}  // namespace klconv
