#include "klconv/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "klconv/errors.hpp"
#include "klconv/special.hpp"

namespace klconv {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool singular_at_origin(const Weight& weight) {
  return std::visit(Overloaded{
                        [](const PlainWeight&) { return false; },
                        [](const BesselPowerWeight&) { return true; },
                        [](const GammaExpWeight& w) { return w.gamma1 != std::floor(w.gamma1) || w.gamma1 < 0.0; },
                        [](const CustomWeight&) { return false; },
                    },
                    weight);
}

// Sign changes of f on [0, max_truncation], each refined by bisection. Changes
// below the truncation floor are ignored.
std::vector<double> sign_changes(const RealFunction& f, const QuadratureSpec& quad) {
  const std::vector<double> xs = uniform_grid(0.0, quad.max_truncation, 0.05);
  std::vector<double> fx(xs.size());
  double largest = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fx[i] = f(xs[i]);
    if (std::isfinite(fx[i])) largest = std::max(largest, std::abs(fx[i]));
  }
  const double floor_value = quad.truncation_threshold * largest;
  std::vector<double> roots;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(fx[i - 1] * fx[i] < 0.0)) continue;
    if (std::max(std::abs(fx[i - 1]), std::abs(fx[i])) < floor_value) continue;
    double lo = xs[i - 1], hi = xs[i];
    const bool rising = fx[i - 1] < 0.0;
    for (int it = 0; it < 60 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      ((f(mid) < 0.0) == rising ? lo : hi) = mid;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

void WeightedNormSpec::validate() const {
  if (!(p >= 1.0)) throw DomainError("weighted norm: p must be >= 1 (or infinity)");
  std::visit(Overloaded{
                 [](const PlainWeight&) {},
                 [](const BesselPowerWeight& w) {
                   if (!(w.beta > 0.0 && w.beta <= 1.0))
                     throw DomainError("bessel weight: beta must lie in (0, 1]");
                   if (!std::isfinite(w.alpha)) throw DomainError("bessel weight: alpha must be finite");
                 },
                 [](const GammaExpWeight& w) {
                   if (!(w.gamma1 > -1.0) || !std::isfinite(w.gamma1))
                     throw DomainError("gamma weight: gamma1 must be > -1");
                   if (!(w.gamma2 > 0.0) || !std::isfinite(w.gamma2))
                     throw DomainError("gamma weight: gamma2 must be > 0");
                 },
                 [](const CustomWeight& w) {
                   if (w.rho.is_zero()) throw DomainError("custom weight: rho must be positive");
                 },
             },
             weight);
}

std::string WeightedNormSpec::describe() const {
  const std::string base = "L_" + (std::isinf(p) ? std::string("inf") : format_number(p));
  return std::visit(Overloaded{
                        [&](const PlainWeight&) { return base; },
                        [&](const BesselPowerWeight& w) {
                          return base + "^{" + format_number(w.alpha) + "," + format_number(w.beta) + "}";
                        },
                        [&](const GammaExpWeight& w) {
                          return base + "^{" + format_number(w.gamma1) + "," + format_number(w.gamma2) +
                                 "}(gamma)";
                        },
                        [&](const CustomWeight& w) { return base + "(" + w.rho.label() + ")"; },
                    },
                    weight);
}

double weight_value(const Weight& weight, double x, const QuadratureSpec& quad) {
  return std::visit(Overloaded{
                        [](const PlainWeight&) { return 1.0; },
                        [&](const BesselPowerWeight& w) {
                          const double k = bessel_k0(w.beta * x, quad);
                          return w.alpha == 0.0 ? k : k * std::pow(x, w.alpha);
                        },
                        [&](const GammaExpWeight& w) {
                          return std::pow(x, w.gamma1) * std::exp(-w.gamma2 * x);
                        },
                        [&](const CustomWeight& w) { return w.rho(x); },
                    },
                    weight);
}

double weighted_norm(const RealFunction& f, const WeightedNormSpec& spec, const QuadratureSpec& quad) {
  spec.validate();
  quad.validate();
  if (f.is_zero()) return 0.0;

  if (std::isinf(spec.p)) {
    double sup = 0.0;
    for (double x : uniform_grid(0.0, quad.max_truncation, 0.01)) sup = std::max(sup, std::abs(f(x)));
    return sup;
  }

  const double p = spec.p;
  const auto integrand = [&](double x) {
    const double fx = std::abs(f(x));
    if (fx == 0.0) return 0.0;
    const double fp = p == 1.0 ? fx : std::pow(fx, p);
    return fp * weight_value(spec.weight, x, quad);
  };
  const bool singular = singular_at_origin(spec.weight);
  const std::vector<double> roots = sign_changes(f, quad);
  double integral = 0.0;
  if (roots.empty()) {
    integral = singular ? integrate_semi_infinite_graded(integrand, quad) : integrate_semi_infinite(integrand, quad);
  } else {
    // |f|^p has a kink at every root, so each root becomes a panel boundary.
    integral = singular ? graded_rule(roots.front(), 1.0 / quad.panels_per_unit, quad).apply(integrand)
                        : integrate_interval(integrand, 0.0, roots.front(), quad);
    for (std::size_t i = 1; i < roots.size(); ++i) integral += integrate_interval(integrand, roots[i - 1], roots[i], quad);
    integral += integrate_tail(integrand, roots.back(), quad);
  }
  const double norm = p == 1.0 ? integral : std::pow(integral, 1.0 / p);
  if (!std::isfinite(norm)) throw NonFiniteNorm("weighted norm of '" + f.label() + "' is not finite");
  return norm;
}

double gamma_weight_integral(double gamma1, double gamma2, const QuadratureSpec& quad) {
  const WeightedNormSpec check{1.0, GammaExpWeight{gamma1, gamma2}};
  check.validate();
  QuadratureSpec wide = quad;
  wide.max_truncation =
      std::max(quad.max_truncation, quad.max_truncation * (1.0 + std::max(gamma1, 0.0)) / gamma2);
  return integrate_semi_infinite_graded(
      [&](double x) { return std::pow(x, gamma1) * std::exp(-gamma2 * x); }, wide);
}

double gamma_weight_closed_form(double gamma1, double gamma2) {
  return gamma_function(gamma1 + 1.0) / std::pow(gamma2, gamma1 + 1.0);
}

double gamma_weight_alternative_form(double gamma1, double gamma2) {
  return std::pow(gamma2, 1.0 - gamma1) * gamma_function(gamma1 + 1.0);
}

MembershipReport check_membership(const RealFunction& f, const WeightedNormSpec& spec,
                                  const QuadratureSpec& quad) {
  MembershipReport report{f.label(), spec.describe(), kInfinity, false};
  try {
    report.norm = weighted_norm(f, spec, quad);
    report.member = std::isfinite(report.norm);
  } catch (const NonFiniteNorm&) {
  } catch (const NonFiniteEvaluation&) {
  }
  return report;
}

}  // namespace klconv
