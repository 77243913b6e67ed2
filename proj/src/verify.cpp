#include "klconv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "klconv/catalog.hpp"
#include "klconv/convolution.hpp"
#include "klconv/solver.hpp"
#include "klconv/spaces.hpp"
#include "klconv/special.hpp"

namespace klconv {

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

IdentityCheck make_check(std::string group, std::string instance, std::string metric, double value, double bound) {
  IdentityCheck c{std::move(group), std::move(instance), std::move(metric), value, bound, false, {}};
  c.pass = std::isfinite(value) && value <= bound;
  return c;
}

void closure_checks(IdentitySuite& suite, const QuadratureSpec& quad) {
  const std::vector<double> axis = uniform_grid(0.2, 2.0, 0.45);
  double worst = 0.0;
  for (double t : axis)
    for (double v : axis) {
      const double exact = std::numbers::pi / 2.0 * std::exp(-v * std::cosh(t));
      worst = std::max(worst, std::abs(bessel_closure_integral(t, v, quad) - exact) / exact);
    }
  suite.checks.push_back(make_check("closure", "(t,v) in [0.2,2]^2, 5x5", "max relative error", worst, 1e-6));
}

void cross_route_checks(IdentitySuite& suite, const QuadratureSpec& quad) {
  const std::vector<double> xs = cross_route_points();
  for (const auto& [a, b] : identity_pairs()) {
    const CrossRouteResult r = cross_route_check(catalog_function(a), catalog_function(b), xs, quad);
    auto c = make_check("cross_route", a + "," + b, "max |direct - spectral| / max(1e-4, 1e-3 |spectral|)",
                        r.max_scaled_gap, 1.0);
    c.details["max_abs_gap"] = r.max_abs_gap;
    suite.checks.push_back(std::move(c));
  }
  const RealFunction f = l2_normalized(catalog_function("t_exp"), quad);
  const RealFunction g = l2_normalized(catalog_function("exp_decay"), quad);
  const CrossRouteResult r = cross_route_check(f, g, xs, quad);
  auto c = make_check("cross_route_l2", f.label() + "," + g.label(),
                      "max |direct - spectral| / max(1e-4, 1e-3 |spectral|)", r.max_scaled_gap, 1.0);
  c.details["max_abs_gap"] = r.max_abs_gap;
  suite.checks.push_back(std::move(c));
}

void factorization_checks(IdentitySuite& suite, const QuadratureSpec& quad) {
  const std::vector<double> ys = uniform_grid(0.0, 6.0, 0.25);
  for (const auto& [a, b] : identity_pairs()) {
    const auto r = factorization_check(catalog_function(a), catalog_function(b), ys, quad, 0.5);
    suite.checks.push_back(make_check("factorization", a + "," + b, "max normalized residual on [0,6]",
                                      r.max_residual, 1e-3));
  }
}

void lemma_checks(IdentitySuite& suite, const QuadratureSpec& quad) {
  const std::vector<double> ys = uniform_grid(0.0, 5.0, 0.25);
  const std::vector<LabelPair> instances = {{"exp_decay", "half_pi_exp"}, {"zero", "half_pi_exp"},
                                            {"half_pi_exp", "half_pi_exp"}};
  for (const auto& [a, b] : instances) {
    const auto r = diff_factorization_check(catalog_function(a), catalog_function(b), ys, quad);
    auto c = make_check("diff_factorization", a + "," + b, "max normalized residual on [0,5]", r.max_residual, 1e-3);
    c.details["rhs_at_0"] = r.rhs.front();
    suite.checks.push_back(std::move(c));
  }
}

void kernel_checks(IdentitySuite& suite, const QuadratureSpec& quad) {
  for (double x : {0.0, 1.0, 3.0})
    for (double v : {0.5, 1.0, 2.0}) {
      const double bound = 8.0 * bessel_k0(v, quad) * (1.0 + 1e-6);
      suite.checks.push_back(make_check("kernel_u_bound", "x=" + number(x) + " v=" + number(v),
                                        "int |phi| du against 8 K0(v)", kernel_abs_u_integral(x, v, quad), bound));
    }
  for (double x : {0.0, 1.0, 3.0})
    for (double u : {0.0, 0.5, 1.0, 2.0})
      suite.checks.push_back(make_check("kernel_v_bound", "x=" + number(x) + " u=" + number(u),
                                        "int |phi| dv against 4", kernel_abs_v_integral(x, u, quad),
                                        4.0 * (1.0 + 1e-6)));
}

void bessel_bound_checks(IdentitySuite& suite, const QuadratureSpec& quad) {
  const std::vector<double> axis = uniform_grid(0.5, 3.0, 0.5);
  for (double beta : {0.3, 0.5, 0.9}) {
    double worst = -kInfinity;
    for (double y : axis)
      for (double v : axis)
        worst = std::max(worst, std::abs(bessel_k_imag(y, v, quad)) - bessel_k_imag_majorant(y, v, beta, quad));
    suite.checks.push_back(make_check("bessel_decay_bound", "beta=" + number(beta) + ", (y,v) in [0.5,3]^2",
                                      "max |K_iy(v)| - exp(-y arccos beta) K0(beta v)", worst, 1e-12));
  }
}

void gamma_checks(IdentitySuite& suite, const QuadratureSpec& quad) {
  for (double g1 : {0.5, 1.0, 2.0})
    for (double g2 : {0.5, 1.0, 2.0}) {
      const double numeric = gamma_weight_integral(g1, g2, quad);
      const double closed = gamma_weight_closed_form(g1, g2);
      auto c = make_check("gamma_integral", "gamma1=" + number(g1) + " gamma2=" + number(g2),
                          "relative gap to Gamma(g1+1)/g2^(g1+1)", std::abs(numeric - closed) / closed, 1e-8);
      c.details["numeric"] = numeric;
      c.details["closed_form"] = closed;
      c.details["printed_form"] = gamma_weight_alternative_form(g1, g2);
      suite.checks.push_back(std::move(c));
    }
}

void bilinearity_checks(IdentitySuite& suite, const QuadratureSpec& quad, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  const double a = coef(rng);
  const double b = coef(rng);
  const RealFunction f1 = catalog_function("exp_decay");
  const RealFunction f2 = catalog_function("gauss");
  const TabulatedConvolution conv(catalog_function("sech"), quad);
  const RealFunction mix = linear_combination(a, f1, b, f2, "mix");
  double worst = 0.0;
  for (double x : {0.5, 2.0}) {
    const double c1 = conv(f1, x);
    const double c2 = conv(f2, x);
    const double budget = 2.0 * (quad.abs_tol + quad.rel_tol * (std::abs(a * c1) + std::abs(b * c2)));
    worst = std::max(worst, std::abs(conv(mix, x) - (a * c1 + b * c2)) / budget);
  }
  auto c = make_check("bilinearity", "a*exp_decay + b*gauss with sech", "max gap / (2 x quadrature budget)", worst, 1.0);
  c.details["a"] = a;
  c.details["b"] = b;
  suite.checks.push_back(std::move(c));
}

void solver_checks(IdentitySuite& suite, const QuadratureSpec& quad) {
  const std::vector<double> xs = uniform_grid(0.0, 6.0, 0.25);
  const RealFunction e = catalog_function("exp_decay");

  const SolveReport second = solve_second_kind(SecondKindProblem{e, e, e, 0.5, quad}, xs);
  suite.checks.push_back(make_check("second_kind", "g1=phi=xi=exp_decay", "spectral residual on [0,6]",
                                    second.spectral_residual, second.tolerance));
  suite.checks.push_back(make_check("second_kind", "g1=phi=xi=exp_decay", "L1 estimate: ||f||_1 against bound",
                                    second.l1_estimate_lhs, second.l1_estimate_rhs));

  const SolveReport degenerate = solve_second_kind(SecondKindProblem{RealFunction(), e, e, 0.5, quad}, xs);
  double gap = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    gap = std::max(gap, std::abs(degenerate.solution[i] - degenerate.rhs_samples[i]));
  suite.checks.push_back(make_check("second_kind_degenerate", "g1=zero phi=xi=exp_decay", "max |f - h|", gap, 1e-10));

  const SolveReport first = solve_first_kind(FirstKindProblem{catalog_function("half_pi_exp"), e, e, 0.5, quad}, xs);
  suite.checks.push_back(make_check("first_kind", "g=half_pi_exp phi=xi=exp_decay",
                                    "relative spectral residual on [0.25,6]", first.spectral_residual, first.tolerance));
  suite.checks.push_back(make_check("first_kind", "g=half_pi_exp phi=xi=exp_decay",
                                    "absolute spectral residual below 0.25", first.small_y_abs_residual,
                                    first.small_y_tolerance));
  suite.checks.push_back(make_check("first_kind", "g=half_pi_exp phi=xi=exp_decay",
                                    "L1 estimate: ||f||_1 against 4 ||phi||_1 ||xi||_1", first.l1_estimate_lhs,
                                    first.l1_estimate_rhs));
}

}  // namespace

bool IdentitySuite::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

std::vector<LabelPair> identity_pairs() {
  return {{"exp_decay", "exp_decay"}, {"t_exp", "exp_decay"}, {"gauss", "sech"}, {"sech", "exp2_decay"},
          {"exp2_decay", "t_exp"}};
}

std::vector<double> cross_route_points() { return {0.0, 0.5, 1.0, 2.0, 4.0}; }

CrossRouteResult cross_route_check(const RealFunction& f, const RealFunction& g, const std::vector<double>& xs,
                                   const QuadratureSpec& quad, double beta) {
  CrossRouteResult r;
  r.x = xs;
  const auto direct = generalized_convolve(ConvolutionRequest{f, g, xs, Route::direct, quad, beta});
  const auto spectral = generalized_convolve(ConvolutionRequest{f, g, xs, Route::spectral, quad, beta});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    r.direct.push_back(direct[i].value);
    r.spectral.push_back(spectral[i].value);
    const double gap = std::abs(direct[i].value - spectral[i].value);
    r.max_abs_gap = std::max(r.max_abs_gap, gap);
    r.max_scaled_gap = std::max(r.max_scaled_gap, gap / std::max(1e-4, 1e-3 * std::abs(spectral[i].value)));
  }
  return r;
}

RealFunction l2_normalized(const RealFunction& f, const QuadratureSpec& quad) {
  const double n = weighted_norm(f, WeightedNormSpec{2.0, PlainWeight{}}, quad);
  if (!(n > 0.0)) return f;
  return linear_combination(1.0 / n, f, 0.0, RealFunction(), f.label() + "/L2");
}

IdentitySuite run_identity_suite(const QuadratureSpec& quad, std::uint64_t seed) {
  quad.validate();
  IdentitySuite suite;
  closure_checks(suite, quad);
  cross_route_checks(suite, quad);
  factorization_checks(suite, quad);
  lemma_checks(suite, quad);
  kernel_checks(suite, quad);
  bessel_bound_checks(suite, quad);
  gamma_checks(suite, quad);
  bilinearity_checks(suite, quad, seed);
  solver_checks(suite, quad);
  return suite;
}

}  // namespace klconv
