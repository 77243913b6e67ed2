#pragma once

#include <functional>
#include <span>
#include <vector>

namespace klconv {

/// Budget and discretisation controls shared by every integral in the library.
///
/// Integration on [0, inf) is a composite Gauss-Legendre rule on [0, T]. The
/// truncation point T comes from scanning |f| at unit steps: it is the first
/// scan point past which every sample stays below truncation_threshold times
/// the largest sample, capped at max_truncation. Panels are at most
/// 1/panels_per_unit wide and at least min_panels cover [0, T], so sharply
/// decaying integrands such as exp(-50 cosh u) are still resolved.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  double truncation_threshold = 1e-16;
  double max_truncation = 40.0;
  int panels_per_unit = 1;
  int nodes_per_panel = 16;
  int oscillation_panels_per_period = 2;
  int min_panels = 8;

  /// Throws DomainError when a field violates its invariant.
  void validate() const;

  bool operator==(const QuadratureSpec&) const = default;
};

enum class Modulation { plain, cosine, sine };

/// Describes the cos(w t) or sin(w t) factor multiplying an envelope.
struct IntegrandTag {
  Modulation kind = Modulation::plain;
  double frequency = 0.0;
};

using Integrand = std::function<double(double)>;

struct Truncation {
  double point = 0.0;
  bool reached = true;  // false when |f(max_truncation)| is still above the threshold
};

/// Counters a caller may collect from the semi-infinite integrators.
struct QuadratureStats {
  int integrals = 0;
  int truncation_not_reached = 0;
};

/// Nodes and weights of a composite rule.
struct NodeSet {
  std::vector<double> nodes;
  std::vector<double> weights;

  double apply(const Integrand& f) const;
};

/// Reference Gauss-Legendre nodes/weights on [-1, 1]; cached per order.
const NodeSet& gauss_legendre(int order);

/// Scans |f| at start, start+1, ... and returns the truncation point (measured from 0).
Truncation find_truncation(const Integrand& f, const QuadratureSpec& spec, double start = 0.0);

/// Composite rule on [a, b]; panel width is min(max_panel_width, (b - a)/min_panels).
NodeSet panel_rule(double a, double b, double max_panel_width, const QuadratureSpec& spec);

/// Composite rule on [0, b] whose first panel is split geometrically towards 0
/// (ratio 1/2, `levels` times) for integrable algebraic or logarithmic
/// endpoint singularities. The origin itself is never a node.
NodeSet graded_rule(double b, double max_panel_width, const QuadratureSpec& spec, int levels = 48);

/// Rule on [0, T] resolving cos/sin(w t) for every w <= max_frequency.
NodeSet oscillatory_rule(double truncation, double max_frequency, const QuadratureSpec& spec);

double integrate_interval(const Integrand& f, double a, double b, const QuadratureSpec& spec);

double integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec,
                               QuadratureStats* stats = nullptr);

/// Integral over [a, inf); the scan runs from a for at most max_truncation units.
double integrate_tail(const Integrand& f, double a, const QuadratureSpec& spec,
                      QuadratureStats* stats = nullptr);

/// Semi-infinite integral for integrands singular (but integrable) at 0.
double integrate_semi_infinite_graded(const Integrand& f, const QuadratureSpec& spec,
                                      QuadratureStats* stats = nullptr);

/// Integral of envelope(t) * {1 | cos(w t) | sin(w t)} over [0, inf).
/// Truncation is read off the envelope; w = 0 with cosine reduces to the
/// plain rule and gives bit-identical results.
double integrate_oscillatory(const Integrand& envelope, IntegrandTag tag, const QuadratureSpec& spec,
                             QuadratureStats* stats = nullptr);

/// Same, over the explicit window [0, truncation].
double integrate_oscillatory_window(const Integrand& envelope, IntegrandTag tag, double truncation,
                                    const QuadratureSpec& spec);

/// Piecewise polynomial table of a smooth function on [0, stop]. Values are
/// stored at Gauss-Legendre nodes of equal-width panels and interpolated
/// barycentrically inside each panel; the table reads zero outside [0, stop).
/// `stop` is rounded up to a whole number of panels.
class PanelTable {
 public:
  PanelTable() = default;
  PanelTable(const Integrand& fn, double stop, double panel_width, int order);

  double operator()(double x) const;

  double stop() const noexcept { return stop_; }
  bool empty() const noexcept { return values_.empty(); }

 private:
  double stop_ = 0.0;
  double width_ = 1.0;
  std::vector<double> ref_nodes_;
  std::vector<double> bary_weights_;
  std::vector<double> values_;  // panel-major
};

using ProductIntegrand = std::function<double(std::span<const double>)>;

/// Iterated integral over [0, inf)^dims (dims 2 or 3). The last coordinate is
/// innermost; each axis gets the graded 1-D rule with its own truncation
/// scan, so boundary layers such as exp(-v c) with large c are resolved.
/// Throws DimensionUnsupported for other dims.
double integrate_product_domain(const ProductIntegrand& f, int dims, const QuadratureSpec& spec);

}  // namespace klconv
