#include "klconv/function.hpp"

#include <algorithm>
#include <cmath>

#include "klconv/errors.hpp"
#include "klconv/quadrature.hpp"

namespace klconv {

RealFunction::RealFunction()
    : kind_(Kind::closed_form), label_("zero"), evaluator_([](double) { return 0.0; }),
      is_zero_(true) {}

RealFunction RealFunction::closed_form(std::string label, std::function<double(double)> evaluator,
                                       std::optional<double> decay_hint) {
  if (!evaluator) throw DomainError("closed_form: empty evaluator for '" + label + "'");
  RealFunction f;
  f.kind_ = Kind::closed_form;
  f.label_ = std::move(label);
  f.evaluator_ = std::move(evaluator);
  f.decay_hint_ = decay_hint;
  f.is_zero_ = false;
  return f;
}

RealFunction RealFunction::sampled(std::string label, std::vector<double> nodes,
                                   std::vector<double> values) {
  if (nodes.empty() || nodes.size() != values.size())
    throw DomainError("sampled: nodes and values must be non-empty and equal-length");
  if (nodes.front() != 0.0) throw DomainError("sampled: grid must start at 0");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!std::isfinite(nodes[i]) || !std::isfinite(values[i]))
      throw DomainError("sampled: non-finite grid entry in '" + label + "'");
    if (i > 0 && !(nodes[i] > nodes[i - 1]))
      throw DomainError("sampled: nodes must be strictly ascending");
  }
  auto grid = std::make_shared<Grid>();
  if (nodes.size() > 1) {
    const double h = nodes[1] - nodes[0];
    bool uniform = true;
    for (std::size_t i = 1; i < nodes.size() && uniform; ++i) {
      const double expect = static_cast<double>(i) * h;
      uniform = std::abs(nodes[i] - expect) <= 1e-12 * std::max(1.0, expect);
    }
    if (uniform) grid->step = h;
  }
  grid->nodes = std::move(nodes);
  grid->values = std::move(values);

  RealFunction f;
  f.kind_ = Kind::sampled_grid;
  f.label_ = std::move(label);
  f.evaluator_ = nullptr;
  f.grid_ = std::move(grid);
  f.is_zero_ = false;
  return f;
}

double RealFunction::operator()(double x) const {
  if (kind_ == Kind::sampled_grid) return eval_grid(x);
  return evaluator_(x);
}

double RealFunction::eval_grid(double x) const {
  const auto& n = grid_->nodes;
  const auto& v = grid_->values;
  if (x < 0.0 || x > n.back() || std::isnan(x)) return 0.0;
  if (n.size() == 1) return v.front();
  std::size_t i;
  if (grid_->step > 0.0) {
    i = static_cast<std::size_t>(x / grid_->step);
    if (i >= n.size() - 1) i = n.size() - 2;
  } else {
    auto it = std::upper_bound(n.begin(), n.end(), x);
    i = static_cast<std::size_t>(std::distance(n.begin(), it));
    i = (i == 0) ? 0 : std::min(i - 1, n.size() - 2);
  }
  const double t = (x - n[i]) / (n[i + 1] - n[i]);
  return v[i] + t * (v[i + 1] - v[i]);
}

std::span<const double> RealFunction::nodes() const noexcept {
  if (!grid_) return {};
  return grid_->nodes;
}

std::span<const double> RealFunction::values() const noexcept {
  if (!grid_) return {};
  return grid_->values;
}

RealFunction RealFunction::with_label(std::string label) const {
  RealFunction f = *this;
  f.label_ = std::move(label);
  return f;
}

std::vector<double> uniform_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop) || stop < start)
    throw DomainError("uniform_grid: need finite start <= stop and step > 0");
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5));
  out.reserve(count + 1);
  for (std::size_t k = 0; k <= count; ++k) out.push_back(start + static_cast<double>(k) * step);
  return out;
}

RealFunction sample_uniform(const RealFunction& f, double step, double stop, std::string label) {
  auto nodes = uniform_grid(0.0, stop, step);
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = f(nodes[i]);
  return RealFunction::sampled(std::move(label), std::move(nodes), std::move(values));
}

RealFunction tabulate(const RealFunction& f, double stop, std::string label, double panel_width,
                      int order) {
  if (f.is_zero()) return RealFunction().with_label(std::move(label));
  auto table = std::make_shared<const PanelTable>([&f](double x) { return f(x); }, stop,
                                                  panel_width, order);
  return RealFunction::closed_form(
      std::move(label), [table](double x) { return (*table)(x); }, f.decay_hint());
}

RealFunction linear_combination(double a, const RealFunction& f, double b, const RealFunction& g,
                                std::string label) {
  return RealFunction::closed_form(std::move(label),
                                   [a, b, f, g](double x) { return a * f(x) + b * g(x); });
}

RealFunction product(const RealFunction& f, const RealFunction& g, std::string label) {
  return RealFunction::closed_form(std::move(label), [f, g](double x) { return f(x) * g(x); });
}

}  // namespace klconv
