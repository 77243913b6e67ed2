#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "klconv/function.hpp"
#include "klconv/quadrature.hpp"

namespace klconv {

enum class FourierKind { cosine, sine };
enum class TransformKind { fourier_cosine, fourier_sine, kontorovich_lebedev };

const char* to_string(TransformKind kind);
TransformKind transform_kind_from_string(const std::string& name);

/// A transform sampled on an ascending y grid.
struct Spectrum {
  TransformKind transform_kind = TransformKind::fourier_cosine;
  std::vector<double> y_grid;
  std::vector<double> values;
  std::string source_label;

  /// Throws DomainError when the grid is not ascending, lengths differ or a value is not finite.
  void validate() const;

  /// Linear interpolant of the samples; the grid must start at 0.
  RealFunction as_function(std::string label) const;
};

/// sqrt(2/pi) * integral of {cos|sin}(x y) f(x) dx over [0, inf). DomainError for y < 0.
double fourier_transform(FourierKind kind, const RealFunction& f, double y,
                         const QuadratureSpec& spec = {});

/// Kontorovich-Lebedev transform: integral of K_{iy}(x) g(x) dx over [0, inf).
/// Evaluates K_{iy} pointwise on a grid graded towards the logarithmic
/// singularity at x = 0.
double kl_transform(const RealFunction& g, double y, const QuadratureSpec& spec = {});

/// Tabulated Laplace profile of g along cosh:
///
///   profile(t) = integral of exp(-v cosh t) g(v) dv over [0, inf).
///
/// It is the inner v-integral of the generalized convolution kernel and,
/// by Fubini, K[g](y) = integral of cos(y t) profile(t) dt. Values are
/// tabulated on Gauss-Legendre panels and interpolated barycentrically; the
/// profile is even in t and is zero past its truncation point.
class LaplaceProfile {
 public:
  LaplaceProfile(const RealFunction& g, const QuadratureSpec& spec);

  double operator()(double t) const;

  /// Direct quadrature of the defining integral at one point (no table).
  static double evaluate(const RealFunction& g, double t, const QuadratureSpec& spec);

  double truncation() const noexcept { return table_.stop(); }

  /// K[g](y) through the profile.
  double kl_transform(double y) const;

 private:
  QuadratureSpec spec_;
  PanelTable table_;
};

/// Evaluates the transform at each grid node. Fourier kinds call
/// fourier_transform per node; the KL kind goes through one LaplaceProfile of f.
Spectrum spectrum_on_grid(TransformKind kind, const RealFunction& f, std::span<const double> y_grid,
                          const QuadratureSpec& spec = {});

/// Default spectral window: step 0.05 on [0, 30].
std::vector<double> default_spectrum_grid();

}  // namespace klconv
