#pragma once

#include "klconv/quadrature.hpp"

namespace klconv {

/// Argument pair of the imaginary-order Bessel function K_{iy}(x).
struct BesselPoint {
  double order_imag = 0.0;  // y >= 0
  double argument = 1.0;    // x > 0
};

/// K_0(x) = integral of exp(-x cosh u) over [0, inf). DomainError for x <= 0.
double bessel_k0(double x, const QuadratureSpec& spec = {});

/// K_{iy}(x) = integral of exp(-x cosh u) cos(y u) over [0, inf), computed by
/// quadrature of the cosine representation on [0, T_u] with
/// T_u = arccosh(1 + ln(1/threshold)/x) + 1.
double bessel_k_imag(double y, double x, const QuadratureSpec& spec = {});
double bessel_k_imag(BesselPoint p, const QuadratureSpec& spec = {});

/// The majorant exp(-y arccos(beta)) K_0(beta v) of |K_{iy}(v)|, 0 < beta <= 1.
double bessel_k_imag_majorant(double y, double v, double beta, const QuadratureSpec& spec = {});

/// Integral of cos(t y) K_{iy}(v) over y in [0, inf), which equals
/// (pi/2) exp(-v cosh t).
double bessel_closure_integral(double t, double v, const QuadratureSpec& spec = {});

/// Euler's gamma function for x > 0.
double gamma_function(double x);

}  // namespace klconv
