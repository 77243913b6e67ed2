#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace klconv {

/// A real function on [0, inf).
///
/// Either a closed-form evaluator or a sampled grid. Sampled grids start at 0,
/// are strictly ascending, interpolate linearly between nodes and evaluate to
/// zero past the last node. Copies are cheap: the grid is shared.
class RealFunction {
 public:
  enum class Kind { closed_form, sampled_grid };

  /// The zero function.
  RealFunction();

  static RealFunction closed_form(std::string label, std::function<double(double)> evaluator,
                                  std::optional<double> decay_hint = std::nullopt);

  /// Throws DomainError unless nodes start at 0, ascend strictly, match values
  /// in length and every value is finite.
  static RealFunction sampled(std::string label, std::vector<double> nodes,
                              std::vector<double> values);

  double operator()(double x) const;

  Kind kind() const noexcept { return kind_; }
  const std::string& label() const noexcept { return label_; }
  std::optional<double> decay_hint() const noexcept { return decay_hint_; }

  /// Grid nodes and values; empty spans for closed-form functions.
  std::span<const double> nodes() const noexcept;
  std::span<const double> values() const noexcept;

  /// True when this is the canonical zero function (not merely zero-valued).
  bool is_zero() const noexcept { return is_zero_; }

  RealFunction with_label(std::string label) const;

 private:
  struct Grid {
    std::vector<double> nodes;
    std::vector<double> values;
    double step = 0.0;  // > 0 when the nodes are uniformly spaced
  };

  double eval_grid(double x) const;

  Kind kind_ = Kind::closed_form;
  std::string label_;
  std::function<double(double)> evaluator_;
  std::shared_ptr<const Grid> grid_;
  std::optional<double> decay_hint_;
  bool is_zero_ = false;
};

/// Samples f at 0, step, 2*step, ... up to stop (inclusive within step/2).
RealFunction sample_uniform(const RealFunction& f, double step, double stop, std::string label);

/// Closed-form copy of f backed by a PanelTable on [0, stop] (zero beyond).
/// Intended for smooth, expensive functions that are evaluated many times.
RealFunction tabulate(const RealFunction& f, double stop, std::string label,
                      double panel_width = 0.5, int order = 16);

/// Pointwise a*f + b*g as a closed-form function.
RealFunction linear_combination(double a, const RealFunction& f, double b, const RealFunction& g,
                                std::string label);

/// Pointwise product f*g as a closed-form function.
RealFunction product(const RealFunction& f, const RealFunction& g, std::string label);

/// Uniform grid a, a+h, ..., b (b included when within h/2 of the last step).
std::vector<double> uniform_grid(double start, double stop, double step);

}  // namespace klconv
