#include "klconv/special.hpp"

#include <cmath>
#include <string>

#include "klconv/errors.hpp"

namespace klconv {

namespace {

double u_window(double x, const QuadratureSpec& spec) {
  const double log_range = std::log(1.0 / spec.truncation_threshold);
  return std::acosh(1.0 + log_range / x) + 1.0;
}

void require_argument(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError(std::string(who) + ": argument must be finite and > 0, got " +
                      std::to_string(x));
}

}  // namespace

double bessel_k0(double x, const QuadratureSpec& spec) { return bessel_k_imag(0.0, x, spec); }

double bessel_k_imag(double y, double x, const QuadratureSpec& spec) {
  require_argument(x, "bessel_k_imag");
  if (!(y >= 0.0) || !std::isfinite(y))
    throw DomainError("bessel_k_imag: order y must be finite and >= 0");
  // exp(-x cosh u) relative to its peak exp(-x); the shift keeps large x from underflowing.
  const double scale = std::exp(-x);
  const auto envelope = [x](double u) { return std::exp(-x * (std::cosh(u) - 1.0)); };
  const IntegrandTag tag{Modulation::cosine, y};
  return scale * integrate_oscillatory_window(envelope, tag, u_window(x, spec), spec);
}

double bessel_k_imag(BesselPoint p, const QuadratureSpec& spec) {
  return bessel_k_imag(p.order_imag, p.argument, spec);
}

double bessel_k_imag_majorant(double y, double v, double beta, const QuadratureSpec& spec) {
  if (!(beta > 0.0) || !(beta <= 1.0)) throw DomainError("majorant: beta must lie in (0, 1]");
  require_argument(v, "bessel_k_imag_majorant");
  return std::exp(-y * std::acos(beta)) * bessel_k0(beta * v, spec);
}

double bessel_closure_integral(double t, double v, const QuadratureSpec& spec) {
  require_argument(v, "bessel_closure_integral");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("bessel_closure_integral: t must be finite and >= 0");
  return integrate_oscillatory([v, &spec](double y) { return bessel_k_imag(y, v, spec); },
                               IntegrandTag{Modulation::cosine, t}, spec);
}

double gamma_function(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("gamma_function: argument must be finite and > 0");
  return std::tgamma(x);
}

}  // namespace klconv
