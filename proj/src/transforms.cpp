#include "klconv/transforms.hpp"

#include <cmath>
#include <numbers>

#include "klconv/errors.hpp"
#include "klconv/special.hpp"

namespace klconv {

namespace {

const double kSqrt2OverPi = std::sqrt(2.0 / std::numbers::pi);

void require_frequency(double y, const char* who) {
  if (!(y >= 0.0) || !std::isfinite(y))
    throw DomainError(std::string(who) + ": y must be finite and >= 0");
}

}  // namespace

const char* to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::fourier_cosine: return "fourier_cosine";
    case TransformKind::fourier_sine: return "fourier_sine";
    case TransformKind::kontorovich_lebedev: return "kontorovich_lebedev";
  }
  return "unknown";
}

TransformKind transform_kind_from_string(const std::string& name) {
  if (name == "fourier_cosine" || name == "fc") return TransformKind::fourier_cosine;
  if (name == "fourier_sine" || name == "fs") return TransformKind::fourier_sine;
  if (name == "kontorovich_lebedev" || name == "kl") return TransformKind::kontorovich_lebedev;
  throw InputError("unknown transform kind '" + name + "'");
}

void Spectrum::validate() const {
  if (y_grid.size() != values.size()) throw DomainError("spectrum: grid/value length mismatch");
  for (std::size_t i = 0; i < y_grid.size(); ++i) {
    if (!std::isfinite(y_grid[i]) || !std::isfinite(values[i]))
      throw DomainError("spectrum: non-finite entry");
    if (i > 0 && !(y_grid[i] > y_grid[i - 1])) throw DomainError("spectrum: grid not ascending");
  }
}

RealFunction Spectrum::as_function(std::string label) const {
  return RealFunction::sampled(std::move(label), y_grid, values);
}

double fourier_transform(FourierKind kind, const RealFunction& f, double y,
                         const QuadratureSpec& spec) {
  require_frequency(y, "fourier_transform");
  if (f.is_zero()) return 0.0;
  if (kind == FourierKind::sine && y == 0.0) return 0.0;
  const IntegrandTag tag{kind == FourierKind::cosine ? Modulation::cosine : Modulation::sine, y};
  return kSqrt2OverPi * integrate_oscillatory([&f](double x) { return f(x); }, tag, spec);
}

double kl_transform(const RealFunction& g, double y, const QuadratureSpec& spec) {
  require_frequency(y, "kl_transform");
  if (g.is_zero()) return 0.0;
  return integrate_semi_infinite_graded(
      [&](double x) {
        const double gx = g(x);
        if (gx == 0.0) return 0.0;
        return bessel_k_imag(y, x, spec) * gx;
      },
      spec);
}

double LaplaceProfile::evaluate(const RealFunction& g, double t, const QuadratureSpec& spec) {
  const double c = std::cosh(t);
  if (!std::isfinite(c)) return 0.0;
  const double inv = 1.0 / c;
  // v = s / cosh t turns exp(-v cosh t) into exp(-s) for every t.
  return inv * integrate_semi_infinite([&](double s) { return std::exp(-s) * g(s * inv); }, spec);
}

LaplaceProfile::LaplaceProfile(const RealFunction& g, const QuadratureSpec& spec) : spec_(spec) {
  spec.validate();
  if (g.is_zero()) return;
  const auto at = [&](double t) { return evaluate(g, t, spec); };
  // The convolution kernel probes the profile at |x +- u +- 1|, well past
  // the usual window, so the scan is given twice the reach.
  QuadratureSpec wide = spec;
  wide.max_truncation = 2.0 * spec.max_truncation + 2.0;
  const Truncation t = find_truncation(at, wide);
  table_ = PanelTable(at, t.point, 0.5, spec.nodes_per_panel);
}

double LaplaceProfile::operator()(double t) const { return table_(std::abs(t)); }

double LaplaceProfile::kl_transform(double y) const {
  require_frequency(y, "kl_transform");
  if (table_.empty()) return 0.0;
  return integrate_oscillatory_window([this](double t) { return table_(t); },
                                      IntegrandTag{Modulation::cosine, y}, table_.stop(), spec_);
}

Spectrum spectrum_on_grid(TransformKind kind, const RealFunction& f, std::span<const double> y_grid,
                          const QuadratureSpec& spec) {
  spec.validate();
  Spectrum out;
  out.transform_kind = kind;
  out.y_grid.assign(y_grid.begin(), y_grid.end());
  out.values.resize(y_grid.size());
  out.source_label = f.label();
  for (std::size_t i = 0; i < y_grid.size(); ++i) {
    require_frequency(y_grid[i], "spectrum_on_grid");
    if (i > 0 && !(y_grid[i] > y_grid[i - 1]))
      throw DomainError("spectrum_on_grid: grid must be strictly ascending");
  }
  if (kind == TransformKind::kontorovich_lebedev) {
    const LaplaceProfile profile(f, spec);
    for (std::size_t i = 0; i < y_grid.size(); ++i) out.values[i] = profile.kl_transform(y_grid[i]);
    return out;
  }
  const FourierKind fk =
      kind == TransformKind::fourier_cosine ? FourierKind::cosine : FourierKind::sine;
  for (std::size_t i = 0; i < y_grid.size(); ++i)
    out.values[i] = fourier_transform(fk, f, y_grid[i], spec);
  return out;
}

std::vector<double> default_spectrum_grid() { return uniform_grid(0.0, 30.0, 0.05); }

}  // namespace klconv
