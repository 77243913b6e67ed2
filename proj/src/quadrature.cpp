#include "klconv/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "klconv/errors.hpp"

namespace klconv {

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("quadrature: tolerances must be > 0");
  if (!(truncation_threshold > 0.0) || !(truncation_threshold < 1.0))
    throw DomainError("quadrature: truncation_threshold must lie in (0, 1)");
  if (!(max_truncation > 0.0) || !std::isfinite(max_truncation))
    throw DomainError("quadrature: max_truncation must be finite and > 0");
  if (panels_per_unit < 1) throw DomainError("quadrature: panels_per_unit must be >= 1");
  if (nodes_per_panel < 1 || nodes_per_panel > 256)
    throw DomainError("quadrature: nodes_per_panel must lie in [1, 256]");
  if (oscillation_panels_per_period < 2)
    throw DomainError("quadrature: oscillation_panels_per_period must be >= 2");
  if (min_panels < 1) throw DomainError("quadrature: min_panels must be >= 1");
}

double NodeSet::apply(const Integrand& f) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double v = f(nodes[i]);
    if (!std::isfinite(v))
      throw NonFiniteEvaluation("integrand is not finite at t = " + std::to_string(nodes[i]));
    sum += weights[i] * v;
  }
  return sum;
}

namespace {

NodeSet compute_gauss_legendre(int n) {
  NodeSet rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

void append_panel(NodeSet& out, double a, double b, const NodeSet& ref) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
    out.nodes.push_back(mid + half * ref.nodes[i]);
    out.weights.push_back(half * ref.weights[i]);
  }
}

Truncation scan(const Integrand& f, const QuadratureSpec& spec, double start, bool skip_first) {
  const auto steps = static_cast<int>(std::floor(spec.max_truncation + 1e-12));
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(steps) + 1);
  double largest = 0.0;
  for (int k = 0; k <= steps; ++k) {
    if (k == 0 && skip_first) {
      samples.push_back(0.0);
      continue;
    }
    const double t = start + k;
    const double v = std::abs(f(t));
    if (!std::isfinite(v))
      throw NonFiniteEvaluation("integrand is not finite at scan point t = " + std::to_string(t));
    samples.push_back(v);
    largest = std::max(largest, v);
  }
  Truncation out;
  if (largest == 0.0) {
    out.point = start + std::min(1.0, spec.max_truncation);
    out.reached = true;
    return out;
  }
  const double floor_value = spec.truncation_threshold * largest;
  int last = -1;
  for (int k = 0; k <= steps; ++k)
    if (samples[static_cast<std::size_t>(k)] >= floor_value) last = k;
  out.reached = samples.back() < floor_value;
  out.point = start + std::min(static_cast<double>(last + 1), spec.max_truncation);
  return out;
}

void record(QuadratureStats* stats, const Truncation& t) {
  if (!stats) return;
  ++stats->integrals;
  if (!t.reached) ++stats->truncation_not_reached;
}

}  // namespace

const NodeSet& gauss_legendre(int order) {
  static std::mutex mutex;
  static std::map<int, NodeSet> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
  return it->second;
}

Truncation find_truncation(const Integrand& f, const QuadratureSpec& spec, double start) {
  return scan(f, spec, start, false);
}

NodeSet panel_rule(double a, double b, double max_panel_width, const QuadratureSpec& spec) {
  NodeSet out;
  if (!(b > a)) return out;
  const double length = b - a;
  const auto by_width = static_cast<int>(std::ceil(length / max_panel_width - 1e-9));
  const int panels = std::max({by_width, spec.min_panels, 1});
  const double width = length / panels;
  const NodeSet& ref = gauss_legendre(spec.nodes_per_panel);
  out.nodes.reserve(static_cast<std::size_t>(panels) * ref.nodes.size());
  out.weights.reserve(out.nodes.capacity());
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double hi = (p + 1 == panels) ? b : a + (p + 1) * width;
    append_panel(out, lo, hi, ref);
  }
  return out;
}

NodeSet graded_rule(double b, double max_panel_width, const QuadratureSpec& spec, int levels) {
  NodeSet regular = panel_rule(0.0, b, max_panel_width, spec);
  const std::size_t per_panel = gauss_legendre(spec.nodes_per_panel).nodes.size();
  if (regular.nodes.empty()) return regular;
  const double first_width = b / std::max(1.0, std::round(regular.nodes.size() / double(per_panel)));
  const NodeSet& ref = gauss_legendre(spec.nodes_per_panel);
  NodeSet out;
  double hi = first_width;
  for (int k = 0; k < levels; ++k) {
    append_panel(out, 0.5 * hi, hi, ref);
    hi *= 0.5;
  }
  append_panel(out, 0.0, hi, ref);
  out.nodes.insert(out.nodes.end(), regular.nodes.begin() + static_cast<std::ptrdiff_t>(per_panel),
                   regular.nodes.end());
  out.weights.insert(out.weights.end(),
                     regular.weights.begin() + static_cast<std::ptrdiff_t>(per_panel),
                     regular.weights.end());
  return out;
}

NodeSet oscillatory_rule(double truncation, double max_frequency, const QuadratureSpec& spec) {
  double width = 1.0 / spec.panels_per_unit;
  if (max_frequency > 0.0) {
    const double period = 2.0 * std::numbers::pi / max_frequency;
    width = std::min(width, period / spec.oscillation_panels_per_period);
  }
  return panel_rule(0.0, truncation, width, spec);
}

double integrate_interval(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  if (!(b > a)) return 0.0;
  return panel_rule(a, b, 1.0 / spec.panels_per_unit, spec).apply(f);
}

double integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec,
                               QuadratureStats* stats) {
  const Truncation t = scan(f, spec, 0.0, false);
  record(stats, t);
  return panel_rule(0.0, t.point, 1.0 / spec.panels_per_unit, spec).apply(f);
}

double integrate_tail(const Integrand& f, double a, const QuadratureSpec& spec,
                      QuadratureStats* stats) {
  const Truncation t = scan(f, spec, a, false);
  record(stats, t);
  return panel_rule(a, t.point, 1.0 / spec.panels_per_unit, spec).apply(f);
}

double integrate_semi_infinite_graded(const Integrand& f, const QuadratureSpec& spec,
                                      QuadratureStats* stats) {
  const Truncation t = scan(f, spec, 0.0, true);
  record(stats, t);
  return graded_rule(t.point, 1.0 / spec.panels_per_unit, spec).apply(f);
}

double integrate_oscillatory_window(const Integrand& envelope, IntegrandTag tag, double truncation,
                                    const QuadratureSpec& spec) {
  const double w = tag.frequency;
  if (!(w >= 0.0) || !std::isfinite(w))
    throw DomainError("integrate_oscillatory: frequency must be finite and >= 0");
  if (w == 0.0 && tag.kind == Modulation::sine) return 0.0;
  if (w == 0.0 || tag.kind == Modulation::plain)
    return panel_rule(0.0, truncation, 1.0 / spec.panels_per_unit, spec).apply(envelope);
  const NodeSet rule = oscillatory_rule(truncation, w, spec);
  if (tag.kind == Modulation::cosine)
    return rule.apply([&](double t) { return envelope(t) * std::cos(w * t); });
  return rule.apply([&](double t) { return envelope(t) * std::sin(w * t); });
}

double integrate_oscillatory(const Integrand& envelope, IntegrandTag tag, const QuadratureSpec& spec,
                             QuadratureStats* stats) {
  if (tag.kind == Modulation::plain || tag.frequency == 0.0) {
    if (tag.kind == Modulation::sine) return 0.0;
    return integrate_semi_infinite(envelope, spec, stats);
  }
  const Truncation t = scan(envelope, spec, 0.0, false);
  record(stats, t);
  return integrate_oscillatory_window(envelope, tag, t.point, spec);
}

PanelTable::PanelTable(const Integrand& fn, double stop, double panel_width, int order)
    : width_(panel_width) {
  if (!(panel_width > 0.0) || !std::isfinite(stop) || stop < 0.0)
    throw DomainError("PanelTable: need panel_width > 0 and finite stop >= 0");
  const NodeSet& ref = gauss_legendre(order);
  ref_nodes_ = ref.nodes;
  const std::size_t n = ref.nodes.size();
  bary_weights_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    bary_weights_[j] = sign * std::sqrt((1.0 - ref.nodes[j] * ref.nodes[j]) * ref.weights[j]);
  }
  const auto panels = static_cast<std::size_t>(std::ceil(stop / width_));
  values_.resize(panels * n);
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = (static_cast<double>(p) + 0.5) * width_;
    for (std::size_t j = 0; j < n; ++j) {
      const double v = fn(mid + 0.5 * width_ * ref_nodes_[j]);
      if (!std::isfinite(v)) throw NonFiniteEvaluation("PanelTable: non-finite sample");
      values_[p * n + j] = v;
    }
  }
  stop_ = static_cast<double>(panels) * width_;
}

double PanelTable::operator()(double x) const {
  if (!(x >= 0.0 && x < stop_)) return 0.0;
  const std::size_t n = ref_nodes_.size();
  const auto p = static_cast<std::size_t>(x / width_);
  const double s = 2.0 * (x - static_cast<double>(p) * width_) / width_ - 1.0;
  const double* vals = values_.data() + p * n;
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double d = s - ref_nodes_[j];
    if (d == 0.0) return vals[j];
    const double w = bary_weights_[j] / d;
    num += w * vals[j];
    den += w;
  }
  return num / den;
}

double integrate_product_domain(const ProductIntegrand& f, int dims, const QuadratureSpec& spec) {
  if (dims == 2) {
    return integrate_semi_infinite_graded(
        [&](double a) {
          return integrate_semi_infinite_graded(
              [&](double b) {
                const std::array<double, 2> p{a, b};
                return f(p);
              },
              spec);
        },
        spec);
  }
  if (dims == 3) {
    return integrate_semi_infinite_graded(
        [&](double a) {
          return integrate_semi_infinite_graded(
              [&](double b) {
                return integrate_semi_infinite_graded(
                    [&](double c) {
                      const std::array<double, 3> p{a, b, c};
                      return f(p);
                    },
                    spec);
              },
              spec);
        },
        spec);
  }
  throw DimensionUnsupported("integrate_product_domain: dims must be 2 or 3, got " +
                             std::to_string(dims));
}

}  // namespace klconv
