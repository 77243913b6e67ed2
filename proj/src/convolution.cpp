#include "klconv/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "klconv/errors.hpp"

namespace klconv {

namespace {

const double kSqrt2OverPi = std::sqrt(2.0 / std::numbers::pi);
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

void require_points(std::span<const double> xs) {
  if (xs.empty()) throw DomainError("convolution: x_points must be non-empty");
  for (double x : xs)
    if (!std::isfinite(x) || x < 0.0) throw DomainError("convolution: x_points must be finite and >= 0");
}

std::vector<ConvolutionPoint> convolve_direct(const ConvolutionRequest& req) {
  std::vector<ConvolutionPoint> out;
  for (double x : req.x_points) {
    const double value = integrate_product_domain(
        [&](std::span<const double> p) {
          // phi vanishes identically at v = 0, where the truncation scan starts.
          if (p[1] <= 0.0) return 0.0;
          const double fu = req.f(p[0]);
          if (fu == 0.0) return 0.0;
          const double gv = req.g(p[1]);
          if (gv == 0.0) return 0.0;
          return 0.25 * kernel_phi(x, p[0], p[1]) * fu * gv;
        },
        2, req.spec);
    out.push_back({x, value});
  }
  return out;
}

std::vector<ConvolutionPoint> convolve_spectral(const ConvolutionRequest& req) {
  if (!(req.beta > 0.0 && req.beta < 1.0))
    throw RouteUnavailable("spectral route requires 0 < beta < 1");
  const LaplaceProfile profile(req.g, req.spec);
  const auto envelope = [&](double y) {
    if (y == 0.0) return 0.0;
    return std::sin(y) * fourier_transform(FourierKind::sine, req.f, y, req.spec) *
           profile.kl_transform(y);
  };
  const Truncation window = find_truncation(envelope, req.spec);
  const double x_max = *std::max_element(req.x_points.begin(), req.x_points.end());
  const NodeSet rule = oscillatory_rule(window.point, x_max, req.spec);

  const Spectrum fs = spectrum_on_grid(TransformKind::fourier_sine, req.f, rule.nodes, req.spec);
  std::vector<double> weighted(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double y = rule.nodes[i];
    weighted[i] = rule.weights[i] * fs.values[i] * profile.kl_transform(y) * std::sin(y);
  }
  std::vector<ConvolutionPoint> out;
  for (double x : req.x_points) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += weighted[i] * std::cos(x * rule.nodes[i]);
    out.push_back({x, kSqrt2OverPi * sum});
  }
  return out;
}

}  // namespace

const char* to_string(Route route) {
  switch (route) {
    case Route::direct: return "direct";
    case Route::spectral: return "spectral";
    case Route::direct_tabulated: return "direct_tabulated";
  }
  return "unknown";
}

double kernel_phi(double x, double u, double v) {
  if (!(v > 0.0)) throw DomainError("kernel_phi: v must be > 0");
  return std::exp(-v * std::cosh(x + u - 1.0)) + std::exp(-v * std::cosh(x - u + 1.0)) -
         std::exp(-v * std::cosh(x + u + 1.0)) - std::exp(-v * std::cosh(x - u - 1.0));
}

double kernel_abs_u_integral(double x, double v, const QuadratureSpec& spec) {
  if (!(v > 0.0)) throw DomainError("kernel_abs_u_integral: v must be > 0");
  return integrate_semi_infinite([&](double u) { return std::abs(kernel_phi(x, u, v)); }, spec);
}

double kernel_abs_v_integral(double x, double u, const QuadratureSpec& spec) {
  return integrate_semi_infinite(
      [&](double v) { return v > 0.0 ? std::abs(kernel_phi(x, u, v)) : 0.0; }, spec);
}

std::vector<ConvolutionPoint> generalized_convolve(const ConvolutionRequest& req) {
  req.spec.validate();
  require_points(req.x_points);
  if (req.route == Route::spectral && !(req.beta > 0.0 && req.beta < 1.0))
    throw RouteUnavailable("spectral route requires 0 < beta < 1");
  if (req.f.is_zero() || req.g.is_zero()) {
    std::vector<ConvolutionPoint> out;
    for (double x : req.x_points) out.push_back({x, 0.0});
    return out;
  }
  switch (req.route) {
    case Route::direct: return convolve_direct(req);
    case Route::spectral: return convolve_spectral(req);
    case Route::direct_tabulated: {
      const TabulatedConvolution conv(req.g, req.spec);
      std::vector<ConvolutionPoint> out;
      for (double x : req.x_points) out.push_back({x, conv(req.f, x)});
      return out;
    }
  }
  throw DomainError("generalized_convolve: unknown route");
}

TabulatedConvolution::TabulatedConvolution(const RealFunction& g, const QuadratureSpec& spec)
    : profile_(std::make_shared<LaplaceProfile>(g, spec)), spec_(spec), zero_(g.is_zero()) {}

double TabulatedConvolution::operator()(const RealFunction& f, double x) const {
  if (zero_ || f.is_zero()) return 0.0;
  const LaplaceProfile& p = *profile_;
  return 0.25 * integrate_semi_infinite(
                    [&](double u) {
                      const double fu = f(u);
                      if (fu == 0.0) return 0.0;
                      return fu * (p(x + u - 1.0) + p(x - u + 1.0) - p(x + u + 1.0) - p(x - u - 1.0));
                    },
                    spec_);
}

RealFunction TabulatedConvolution::sample(const RealFunction& f, double step, double stop,
                                          std::string label) const {
  auto nodes = uniform_grid(0.0, stop, step);
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = (*this)(f, nodes[i]);
  return RealFunction::sampled(std::move(label), std::move(nodes), std::move(values));
}

FactorizationReport factorization_check(const RealFunction& f, const RealFunction& g,
                                        std::span<const double> y_grid, const QuadratureSpec& spec,
                                        double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("factorization_check: beta must lie in (0, 1)");
  FactorizationReport report;
  report.grid.assign(y_grid.begin(), y_grid.end());
  const std::size_t n = y_grid.size();
  report.lhs.assign(n, 0.0);
  report.rhs.assign(n, 0.0);
  report.residual.assign(n, 0.0);
  if (f.is_zero() || g.is_zero()) return report;

  const TabulatedConvolution conv(g, spec);
  const RealFunction sampled = conv.sample(f, 0.05, 25.0, "conv(" + f.label() + "," + g.label() + ")");
  const Spectrum fs = spectrum_on_grid(TransformKind::fourier_sine, f, y_grid, spec);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = y_grid[i];
    report.lhs[i] = fourier_transform(FourierKind::cosine, sampled, y, spec);
    report.rhs[i] = std::sin(y) * fs.values[i] * conv.profile().kl_transform(y);
    report.residual[i] = std::abs(report.lhs[i] - report.rhs[i]) / (1.0 + std::abs(report.rhs[i]));
    report.max_residual = std::max(report.max_residual, report.residual[i]);
  }
  return report;
}

double classical_convolve(ClassicalKind kind, const RealFunction& f, const RealFunction& g, double x,
                          const QuadratureSpec& spec) {
  if (!std::isfinite(x) || x < 0.0) throw DomainError("classical_convolve: x must be finite and >= 0");
  if (f.is_zero() || g.is_zero()) return 0.0;
  const double sign = kind == ClassicalKind::cosine ? 1.0 : -1.0;
  // g(|x - u|) has a kink at u = x, so the two sides are integrated separately.
  const double inner = integrate_interval(
      [&](double u) { return f(u) * (g(x - u) + sign * g(x + u)); }, 0.0, x, spec);
  const double outer = integrate_tail(
      [&](double u) { return f(u) * (g(u - x) + sign * g(x + u)); }, x, spec);
  return kInvSqrt2Pi * (inner + outer);
}

RealFunction sample_classical_convolution(ClassicalKind kind, const RealFunction& f,
                                          const RealFunction& g, double step, double stop,
                                          const QuadratureSpec& spec, std::string label) {
  auto nodes = uniform_grid(0.0, stop, step);
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    values[i] = classical_convolve(kind, f, g, nodes[i], spec);
  return RealFunction::sampled(std::move(label), std::move(nodes), std::move(values));
}

}  // namespace klconv
