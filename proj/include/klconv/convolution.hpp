#pragma once

#include <memory>
#include <span>
#include <vector>

#include "klconv/function.hpp"
#include "klconv/quadrature.hpp"
#include "klconv/transforms.hpp"

namespace klconv {

/// phi(x,u,v) = e^{-v cosh(x+u-1)} + e^{-v cosh(x-u+1)} - e^{-v cosh(x+u+1)} - e^{-v cosh(x-u-1)}.
/// DomainError for v <= 0.
double kernel_phi(double x, double u, double v);

/// Integral of |phi(x,u,v)| over u in [0, inf) (for fixed x, v).
double kernel_abs_u_integral(double x, double v, const QuadratureSpec& spec = {});

/// Integral of |phi(x,u,v)| over v in [0, inf) (for fixed x, u).
double kernel_abs_v_integral(double x, double u, const QuadratureSpec& spec = {});

enum class Route {
  direct,            // iterated (u, v) quadrature of (1/4) phi f g
  spectral,          // sqrt(2/pi) * integral of F_s f * K[g] * sin y * cos(x y) dy
  direct_tabulated,  // direct, with the inner v-integral read from a LaplaceProfile of g
};

const char* to_string(Route route);

struct ConvolutionRequest {
  RealFunction f;
  RealFunction g;
  std::vector<double> x_points;
  Route route = Route::direct;
  QuadratureSpec spec;
  double beta = 0.5;
};

struct ConvolutionPoint {
  double x = 0.0;
  double value = 0.0;
};

/// The trigonometric-weighted generalized convolution (f *_gamma g)(x) at each
/// requested point. Throws RouteUnavailable for the spectral route unless
/// 0 < beta < 1, and DomainError for empty or non-finite x_points.
std::vector<ConvolutionPoint> generalized_convolve(const ConvolutionRequest& req);

/// Direct-route evaluator that tabulates the inner v-integral once per g.
///
/// (f *_gamma g)(x) = 1/4 * int f(u) [P(x+u-1) + P(x-u+1) - P(x+u+1) - P(x-u-1)] du,
/// where P is the LaplaceProfile of g.
class TabulatedConvolution {
 public:
  TabulatedConvolution(const RealFunction& g, const QuadratureSpec& spec);

  double operator()(const RealFunction& f, double x) const;

  /// Samples x -> (f *_gamma g)(x) on [0, stop] with the given step.
  RealFunction sample(const RealFunction& f, double step, double stop, std::string label) const;

  const LaplaceProfile& profile() const noexcept { return *profile_; }

 private:
  std::shared_ptr<const LaplaceProfile> profile_;
  QuadratureSpec spec_;
  bool zero_ = false;
};

struct FactorizationReport {
  std::vector<double> grid;
  std::vector<double> lhs;  // F_c of the sampled direct-route convolution
  std::vector<double> rhs;  // sin y * (F_s f)(y) * K[g](y)
  std::vector<double> residual;
  double max_residual = 0.0;
};

/// Compares both sides of F_c(f *_gamma g)(y) = sin y (F_s f)(y) K[g](y).
/// The convolution is sampled at step 0.05 on [0, 25] (zero beyond); the
/// residual at y is |lhs - rhs| / (1 + |rhs|).
FactorizationReport factorization_check(const RealFunction& f, const RealFunction& g,
                                        std::span<const double> y_grid, const QuadratureSpec& spec,
                                        double beta);

enum class ClassicalKind {
  cosine,       // (f * g)(x) with g(|x-u|) + g(x+u)
  sine_cosine,  // (f * g)(x) with g(|x-u|) - g(x+u)
};

/// (1/sqrt(2 pi)) * int f(u) [g(|x-u|) +- g(x+u)] du, split at u = x.
double classical_convolve(ClassicalKind kind, const RealFunction& f, const RealFunction& g, double x,
                          const QuadratureSpec& spec = {});

RealFunction sample_classical_convolution(ClassicalKind kind, const RealFunction& f,
                                          const RealFunction& g, double step, double stop,
                                          const QuadratureSpec& spec, std::string label);

}  // namespace klconv
