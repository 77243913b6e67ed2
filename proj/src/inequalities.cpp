#include "klconv/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "klconv/catalog.hpp"
#include "klconv/convolution.hpp"
#include "klconv/errors.hpp"
#include "klconv/special.hpp"

namespace klconv {

namespace {

struct IdName {
  InequalityId id;
  const char* name;
};

constexpr IdName kIdNames[] = {
    {InequalityId::L1_BOUND_2_3, "L1_BOUND_2_3"},
    {InequalityId::FC_CONV_L1_1_8, "FC_CONV_L1_1_8"},
    {InequalityId::YOUNG_TRIPLE_3_2, "YOUNG_TRIPLE_3_2"},
    {InequalityId::YOUNG_NORM_3_10, "YOUNG_NORM_3_10"},
    {InequalityId::LINF_3_12, "LINF_3_12"},
    {InequalityId::TWO_PARAM_3_13, "TWO_PARAM_3_13"},
    {InequalityId::SAITOH_4_1, "SAITOH_4_1"},
    {InequalityId::SAITOH_COR_4_6, "SAITOH_COR_4_6"},
    {InequalityId::SC_CONV_L1_PROP, "SC_CONV_L1_PROP"},
    {InequalityId::SC_CONV_YOUNG_PROP, "SC_CONV_YOUNG_PROP"},
    {InequalityId::SOLUTION_EST_5_1, "SOLUTION_EST_5_1"},
    {InequalityId::SOLUTION_EST_5_2, "SOLUTION_EST_5_2"},
};

const double kTwoSqrtTwoOverPi = 2.0 * std::sqrt(2.0 / std::numbers::pi);

std::string key_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const RealFunction& role(const NamedFunctions& functions, const std::string& name) {
  const auto it = functions.find(name);
  if (it == functions.end()) throw InputError(std::string("missing function role '") + name + "'");
  return it->second;
}

double param(const Parameters& parameters, const std::string& name) {
  const auto it = parameters.find(name);
  if (it == parameters.end()) throw InputError("missing parameter '" + name + "'");
  if (!std::isfinite(it->second)) throw InputError("parameter '" + name + "' must be finite");
  return it->second;
}

void require_exponent(const std::string& name, double v) {
  if (!(v > 1.0) || !std::isfinite(v))
    throw ParameterRelationViolated("exponent " + name + " = " + key_number(v) + " must lie in (1, inf)");
}

void require_relation(double lhs, double rhs, const std::string& relation) {
  if (std::abs(lhs - rhs) > 1e-12)
    throw ParameterRelationViolated(relation + " fails: " + key_number(lhs) + " != " + key_number(rhs));
}

void require_beta(double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) throw ParameterRelationViolated("beta must lie in (0, 1]");
}

WeightedNormSpec lp(double p) { return {p, PlainWeight{}}; }
WeightedNormSpec lp_bessel(double p, double beta) { return {p, BesselPowerWeight{0.0, beta}}; }

double ratio_of(double lhs, double rhs) {
  if (lhs == 0.0 && rhs == 0.0) return 0.0;
  return lhs / rhs;
}

}  // namespace

const char* to_string(InequalityId id) {
  for (const auto& e : kIdNames)
    if (e.id == id) return e.name;
  return "unknown";
}

InequalityId inequality_id_from_string(const std::string& name) {
  for (const auto& e : kIdNames)
    if (name == e.name) return e.id;
  throw InputError("unknown inequality id '" + name + "'");
}

std::vector<InequalityId> all_inequality_ids() {
  std::vector<InequalityId> ids;
  for (const auto& e : kIdNames) ids.push_back(e.id);
  return ids;
}

const char* to_string(CheckMode mode) { return mode == CheckMode::strict ? "strict" : "ratio_only"; }

struct CheckContext::Cache {
  std::map<std::string, RealFunction> convolutions;
  std::map<std::string, double> norms;
  std::map<std::string, std::shared_ptr<TabulatedConvolution>> profiles;
  std::map<std::string, SolveReport> solves;
};

CheckContext::CheckContext(QuadratureSpec quad) : quad_(quad), cache_(std::make_unique<Cache>()) {
  quad_.validate();
}

CheckContext::~CheckContext() = default;

const RealFunction& CheckContext::generalized(const RealFunction& f, const RealFunction& g) {
  const std::string key = "gamma|" + f.label() + "|" + g.label();
  if (auto it = cache_->convolutions.find(key); it != cache_->convolutions.end()) return it->second;
  const std::string label = "(" + f.label() + " *gamma " + g.label() + ")";
  RealFunction result = RealFunction().with_label(label);
  if (!f.is_zero() && !g.is_zero()) {
    auto& conv = cache_->profiles[g.label()];
    if (!conv) conv = std::make_shared<TabulatedConvolution>(g, quad_);
    const std::shared_ptr<const TabulatedConvolution> shared = conv;
    result = tabulate(RealFunction::closed_form(label, [shared, f](double x) { return (*shared)(f, x); }),
                      quad_.max_truncation, label);
  }
  return cache_->convolutions.emplace(key, std::move(result)).first->second;
}

const RealFunction& CheckContext::classical(bool sine_cosine, const RealFunction& f, const RealFunction& g) {
  const std::string key = std::string(sine_cosine ? "sc|" : "cos|") + f.label() + "|" + g.label();
  if (auto it = cache_->convolutions.find(key); it != cache_->convolutions.end()) return it->second;
  const std::string label = "(" + f.label() + (sine_cosine ? " *FsFc " : " *Fc ") + g.label() + ")";
  RealFunction result = RealFunction().with_label(label);
  if (!f.is_zero() && !g.is_zero()) {
    const ClassicalKind kind = sine_cosine ? ClassicalKind::sine_cosine : ClassicalKind::cosine;
    const QuadratureSpec quad = quad_;
    result = tabulate(RealFunction::closed_form(
                          label, [kind, f, g, quad](double x) { return classical_convolve(kind, f, g, x, quad); }),
                      quad_.max_truncation, label);
  }
  return cache_->convolutions.emplace(key, std::move(result)).first->second;
}

double CheckContext::norm(const RealFunction& f, const WeightedNormSpec& spec) {
  if (f.is_zero()) return 0.0;
  const std::string key = f.label() + "|" + key_number(spec.p) + "|" + spec.describe();
  if (auto it = cache_->norms.find(key); it != cache_->norms.end()) return it->second;
  const double value = weighted_norm(f, spec, quad_);
  cache_->norms.emplace(key, value);
  return value;
}

const SolveReport& CheckContext::second_kind(const RealFunction& g1, const RealFunction& phi,
                                             const RealFunction& xi, double beta) {
  const std::string key = "second|" + g1.label() + "|" + phi.label() + "|" + xi.label() + "|" + key_number(beta);
  if (auto it = cache_->solves.find(key); it != cache_->solves.end()) return it->second;
  const std::vector<double> xs = uniform_grid(0.0, 6.0, 0.25);
  return cache_->solves.emplace(key, solve_second_kind(SecondKindProblem{g1, phi, xi, beta, quad_}, xs))
      .first->second;
}

const SolveReport& CheckContext::first_kind(const RealFunction& g, const RealFunction& phi,
                                            const RealFunction& xi, double beta) {
  const std::string key = "first|" + g.label() + "|" + phi.label() + "|" + xi.label() + "|" + key_number(beta);
  if (auto it = cache_->solves.find(key); it != cache_->solves.end()) return it->second;
  const std::vector<double> xs = uniform_grid(0.0, 6.0, 0.25);
  return cache_->solves.emplace(key, solve_first_kind(FirstKindProblem{g, phi, xi, beta, quad_}, xs))
      .first->second;
}

InequalityReport check_inequality(InequalityId id, const NamedFunctions& functions,
                                  const Parameters& parameters, CheckContext& ctx, double slack) {
  if (!(slack >= 0.0) || !std::isfinite(slack)) throw DomainError("slack must be finite and >= 0");
  InequalityReport r;
  r.id = id;
  r.parameters = parameters;
  r.slack = slack;
  for (const auto& [name, fn] : functions) r.functions[name] = fn.label();

  switch (id) {
    case InequalityId::L1_BOUND_2_3: {
      const double beta = param(parameters, "beta");
      require_beta(beta);
      const auto& f = role(functions, "f");
      const auto& g = role(functions, "g");
      r.lhs = ctx.norm(ctx.generalized(f, g), lp(1.0));
      r.rhs = 2.0 * ctx.norm(f, lp(1.0)) * ctx.norm(g, lp_bessel(1.0, beta));
      break;
    }
    case InequalityId::FC_CONV_L1_1_8: {
      const auto& f = role(functions, "f");
      const auto& g = role(functions, "g");
      r.lhs = ctx.norm(ctx.classical(false, f, g), lp(1.0));
      r.rhs = kTwoSqrtTwoOverPi * ctx.norm(f, lp(1.0)) * ctx.norm(g, lp(1.0));
      break;
    }
    case InequalityId::YOUNG_TRIPLE_3_2: {
      const double p = param(parameters, "p"), q = param(parameters, "q"), rr = param(parameters, "r");
      const double beta = param(parameters, "beta");
      require_exponent("p", p);
      require_exponent("q", q);
      require_exponent("r", rr);
      require_beta(beta);
      require_relation(1.0 / p + 1.0 / q + 1.0 / rr, 2.0, "1/p + 1/q + 1/r = 2");
      const auto& f = role(functions, "f");
      const auto& g = role(functions, "g");
      const auto& h = role(functions, "h");
      const RealFunction& c = ctx.generalized(f, g);
      r.lhs = c.is_zero() || h.is_zero()
                  ? 0.0
                  : std::abs(integrate_semi_infinite([&](double x) { return c(x) * h(x); }, ctx.quad()));
      r.rhs = std::pow(2.0, 1.0 / q) * ctx.norm(f, lp(p)) * ctx.norm(g, lp_bessel(q, beta)) * ctx.norm(h, lp(rr));
      break;
    }
    case InequalityId::YOUNG_NORM_3_10: {
      const double p = param(parameters, "p"), q = param(parameters, "q"), rr = param(parameters, "r");
      const double beta = param(parameters, "beta");
      require_exponent("p", p);
      require_exponent("q", q);
      require_exponent("r", rr);
      require_beta(beta);
      require_relation(1.0 / p + 1.0 / q, 1.0 + 1.0 / rr, "1/p + 1/q = 1 + 1/r");
      const auto& f = role(functions, "f");
      const auto& g = role(functions, "g");
      r.lhs = ctx.norm(ctx.generalized(f, g), lp(rr));
      r.rhs = std::pow(2.0, 1.0 / q) * ctx.norm(f, lp(p)) * ctx.norm(g, lp_bessel(q, beta));
      break;
    }
    case InequalityId::LINF_3_12: {
      const double p = param(parameters, "p"), q = param(parameters, "q");
      const double beta = param(parameters, "beta");
      require_exponent("p", p);
      require_exponent("q", q);
      require_beta(beta);
      require_relation(1.0 / p + 1.0 / q, 1.0, "1/p + 1/q = 1");
      const auto& f = role(functions, "f");
      const auto& g = role(functions, "g");
      r.lhs = ctx.norm(ctx.generalized(f, g), lp(kInfinity));
      r.rhs = std::pow(2.0, 1.0 / q) * ctx.norm(f, lp(p)) * ctx.norm(g, lp_bessel(q, beta));
      break;
    }
    case InequalityId::TWO_PARAM_3_13: {
      const double p = param(parameters, "p"), q = param(parameters, "q"), s = param(parameters, "s");
      const double g1 = param(parameters, "gamma1"), g2 = param(parameters, "gamma2");
      const double beta = param(parameters, "beta");
      require_exponent("p", p);
      require_exponent("q", q);
      require_beta(beta);
      require_relation(1.0 / p + 1.0 / q, 1.0, "1/p + 1/q = 1");
      if (!(s >= 1.0)) throw ParameterRelationViolated("s must be >= 1");
      if (!(g1 > -1.0)) throw ParameterRelationViolated("gamma1 must be > -1");
      if (!(g2 > 0.0)) throw ParameterRelationViolated("gamma2 must be > 0");
      const auto& f = role(functions, "f");
      const auto& g = role(functions, "g");
      const double norms = ctx.norm(f, lp(p)) * ctx.norm(g, lp_bessel(q, beta));
      const double two_q = std::pow(2.0, 1.0 / q);
      const double integral = gamma_weight_integral(g1, g2, ctx.quad());
      r.lhs = ctx.norm(ctx.generalized(f, g), WeightedNormSpec{s, GammaExpWeight{g1, g2}});
      r.rhs = two_q * std::pow(integral, 1.0 / s) * norms;
      r.audit["gamma_integral_numeric"] = integral;
      r.audit["gamma_integral_closed_form"] = gamma_weight_closed_form(g1, g2);
      r.audit["gamma_integral_printed_form"] = gamma_weight_alternative_form(g1, g2);
      r.audit["rhs_printed_constant"] = two_q * std::pow(gamma_weight_alternative_form(g1, g2), 1.0 / s) * norms;
      break;
    }
    case InequalityId::SAITOH_4_1: {
      r.mode = CheckMode::ratio_only;
      const double p = param(parameters, "p");
      require_exponent("p", p);
      const auto& F1 = role(functions, "F1");
      const auto& F2 = role(functions, "F2");
      const auto& rho1 = role(functions, "rho1");
      const auto& rho2 = role(functions, "rho2");
      const RealFunction a = product(F1, rho1, F1.label() + "." + rho1.label());
      const RealFunction b = product(F2, rho2, F2.label() + "." + rho2.label());
      const RealFunction& num = ctx.generalized(F1.is_zero() ? RealFunction() : a, F2.is_zero() ? RealFunction() : b);
      const RealFunction& den = ctx.generalized(rho1, rho2);
      if (!num.is_zero()) {
        const double integral = integrate_semi_infinite(
            [&](double x) {
              const double d = std::abs(den(x));
              if (d == 0.0) return 0.0;
              return std::pow(std::abs(num(x)), p) * std::pow(d, 1.0 - p);
            },
            ctx.quad());
        r.lhs = std::pow(integral, 1.0 / p);
      }
      r.rhs = ctx.norm(F1, WeightedNormSpec{p, CustomWeight{rho1}}) * ctx.norm(F2, WeightedNormSpec{p, CustomWeight{rho2}});
      r.audit["k0_factor_at_v_1"] = std::pow(2.0 * bessel_k0(1.0, ctx.quad()), 1.0 / p);
      break;
    }
    case InequalityId::SAITOH_COR_4_6: {
      r.mode = CheckMode::ratio_only;
      const double p = param(parameters, "p");
      require_exponent("p", p);
      const auto& F1 = role(functions, "F1");
      const auto& F2 = role(functions, "F2");
      const auto& rho2 = role(functions, "rho2");
      const RealFunction b = F2.is_zero() ? RealFunction() : product(F2, rho2, F2.label() + "." + rho2.label());
      r.lhs = ctx.norm(ctx.generalized(F1, b), lp(p));
      r.rhs = std::pow(ctx.norm(rho2, lp(1.0)), 1.0 - 1.0 / p) * ctx.norm(F1, lp(p)) *
              ctx.norm(F2, WeightedNormSpec{p, CustomWeight{rho2}});
      r.audit["k0_factor_at_v_1"] = 2.0 * bessel_k0(1.0, ctx.quad());
      break;
    }
    case InequalityId::SC_CONV_L1_PROP: {
      const auto& phi = role(functions, "phi");
      const auto& g = role(functions, "g");
      r.lhs = ctx.norm(ctx.classical(true, phi, g), lp(1.0));
      r.rhs = kTwoSqrtTwoOverPi * ctx.norm(phi, lp(1.0)) * ctx.norm(g, lp(1.0));
      break;
    }
    case InequalityId::SC_CONV_YOUNG_PROP: {
      const double p = param(parameters, "p"), q = param(parameters, "q"), rr = param(parameters, "r");
      require_exponent("p", p);
      require_exponent("q", q);
      require_exponent("r", rr);
      require_relation(1.0 / p + 1.0 / q, 1.0 + 1.0 / rr, "1/p + 1/q = 1 + 1/r");
      const auto& phi = role(functions, "phi");
      const auto& g = role(functions, "g");
      r.lhs = ctx.norm(ctx.classical(true, phi, g), lp(rr));
      r.rhs = kTwoSqrtTwoOverPi * ctx.norm(phi, lp(p)) * ctx.norm(g, lp(q));
      break;
    }
    case InequalityId::SOLUTION_EST_5_1: {
      const double beta = param(parameters, "beta");
      const SolveReport& s = ctx.second_kind(role(functions, "g1"), role(functions, "phi"), role(functions, "xi"), beta);
      r.lhs = s.l1_estimate_lhs;
      r.rhs = s.l1_estimate_rhs;
      r.audit["spectral_residual"] = s.spectral_residual;
      for (const auto& [name, value] : s.norms) r.audit[name] = value;
      break;
    }
    case InequalityId::SOLUTION_EST_5_2: {
      const double beta = param(parameters, "beta");
      const auto& phi = role(functions, "phi");
      const auto& xi = role(functions, "xi");
      const SolveReport& s = ctx.first_kind(role(functions, "g"), phi, xi, beta);
      r.audit["spectral_residual"] = s.spectral_residual;
      for (const auto& [name, value] : s.norms) r.audit[name] = value;
      if (parameters.count("s") == 0) {
        r.lhs = s.l1_estimate_lhs;
        r.rhs = s.l1_estimate_rhs;
        break;
      }
      const double p = param(parameters, "p"), q = param(parameters, "q"), rr = param(parameters, "r");
      const double sv = param(parameters, "s");
      require_exponent("p", p);
      require_exponent("q", q);
      require_exponent("r", rr);
      require_exponent("s", sv);
      if (!(beta > 0.0 && beta < 1.0)) throw ParameterRelationViolated("beta must lie in (0, 1)");
      require_relation(1.0 / p + 1.0 / q + 1.0 / rr, 2.0 + 1.0 / sv, "1/p + 1/q + 1/r = 2 + 1/s");
      const std::string label = "f[" + role(functions, "g").label() + "," + phi.label() + "," + xi.label() + "]";
      r.lhs = ctx.norm(s.solution_function.with_label(label), lp(sv));
      r.rhs = std::pow(2.0, 1.0 + 1.0 / q) * std::pow(1.0 / rr, 1.0 / rr) * ctx.norm(phi, lp(p)) *
              ctx.norm(xi, lp_bessel(q, beta));
      break;
    }
  }

  if (!std::isfinite(r.lhs) || !std::isfinite(r.rhs))
    throw NonFiniteNorm(std::string(to_string(id)) + ": non-finite side");
  r.ratio = ratio_of(r.lhs, r.rhs);
  if (r.mode == CheckMode::strict) r.pass = r.ratio <= 1.0 + slack;
  return r;
}

InequalityReport check_inequality(InequalityId id, const NamedFunctions& functions,
                                  const Parameters& parameters, const QuadratureSpec& quad, double slack) {
  CheckContext ctx(quad);
  return check_inequality(id, functions, parameters, ctx, slack);
}

bool SuiteResult::all_strict_pass() const {
  if (!errors.empty()) return false;
  return std::all_of(reports.begin(), reports.end(), [](const InequalityReport& r) {
    return r.mode != CheckMode::strict || r.pass.value_or(false);
  });
}

std::vector<LabelPair> ordered_pairs(const std::vector<std::string>& labels) {
  std::vector<LabelPair> pairs;
  for (const auto& a : labels)
    for (const auto& b : labels) pairs.emplace_back(a, b);
  return pairs;
}

namespace {

struct Instance {
  NamedFunctions functions;
  Parameters parameters;
};

std::string describe(const Instance& inst) {
  std::string out;
  for (const auto& [name, fn] : inst.functions) out += name + "=" + fn.label() + " ";
  for (const auto& [name, v] : inst.parameters) out += name + "=" + key_number(v) + " ";
  if (!out.empty()) out.pop_back();
  return out;
}

std::vector<Instance> instances_for(InequalityId id, const std::vector<LabelPair>& pairs, const ParameterGrid& grid) {
  std::vector<Instance> out;
  const auto fn = catalog_function;
  const double beta = grid.beta;
  auto each_pair = [&](auto&& body) {
    for (const auto& [a, b] : pairs) body(fn(a), fn(b));
  };
  switch (id) {
    case InequalityId::L1_BOUND_2_3:
      each_pair([&](const RealFunction& f, const RealFunction& g) {
        for (double bt : grid.l1_betas) out.push_back({{{"f", f}, {"g", g}}, {{"beta", bt}}});
      });
      break;
    case InequalityId::FC_CONV_L1_1_8:
      each_pair([&](const RealFunction& f, const RealFunction& g) { out.push_back({{{"f", f}, {"g", g}}, {}}); });
      break;
    case InequalityId::YOUNG_TRIPLE_3_2:
      each_pair([&](const RealFunction& f, const RealFunction& g) {
        for (const auto& t : grid.young_triples)
          for (const auto& h : grid.young_test_functions)
            out.push_back({{{"f", f}, {"g", g}, {"h", fn(h)}}, {{"p", t[0]}, {"q", t[1]}, {"r", t[2]}, {"beta", beta}}});
      });
      break;
    case InequalityId::YOUNG_NORM_3_10:
      each_pair([&](const RealFunction& f, const RealFunction& g) {
        for (const auto& t : grid.young_norm_triples)
          out.push_back({{{"f", f}, {"g", g}}, {{"p", t[0]}, {"q", t[1]}, {"r", t[2]}, {"beta", beta}}});
      });
      break;
    case InequalityId::LINF_3_12:
      each_pair([&](const RealFunction& f, const RealFunction& g) {
        for (const auto& t : grid.linf_pairs)
          out.push_back({{{"f", f}, {"g", g}}, {{"p", t[0]}, {"q", t[1]}, {"beta", beta}}});
      });
      break;
    case InequalityId::TWO_PARAM_3_13:
      each_pair([&](const RealFunction& f, const RealFunction& g) {
        for (const auto& pq : grid.two_param_pq)
          for (double s : grid.two_param_s)
            for (const auto& gm : grid.two_param_gammas)
              out.push_back({{{"f", f}, {"g", g}},
                             {{"p", pq[0]}, {"q", pq[1]}, {"s", s}, {"gamma1", gm[0]}, {"gamma2", gm[1]}, {"beta", beta}}});
      });
      break;
    case InequalityId::SAITOH_4_1:
      each_pair([&](const RealFunction& f, const RealFunction& g) {
        const RealFunction rho = fn(grid.saitoh_rho);
        for (double p : grid.saitoh_p)
          out.push_back({{{"F1", f}, {"F2", g}, {"rho1", rho}, {"rho2", rho}}, {{"p", p}}});
      });
      break;
    case InequalityId::SAITOH_COR_4_6:
      each_pair([&](const RealFunction& f, const RealFunction& g) {
        for (double p : grid.saitoh_p) out.push_back({{{"F1", f}, {"F2", g}, {"rho2", fn(grid.saitoh_rho)}}, {{"p", p}}});
      });
      break;
    case InequalityId::SC_CONV_L1_PROP:
      each_pair([&](const RealFunction& f, const RealFunction& g) { out.push_back({{{"phi", f}, {"g", g}}, {}}); });
      break;
    case InequalityId::SC_CONV_YOUNG_PROP:
      each_pair([&](const RealFunction& f, const RealFunction& g) {
        for (const auto& t : grid.sc_young_triples)
          out.push_back({{{"phi", f}, {"g", g}}, {{"p", t[0]}, {"q", t[1]}, {"r", t[2]}}});
      });
      break;
    case InequalityId::SOLUTION_EST_5_1:
      for (const auto& inst : grid.second_kind_instances)
        out.push_back({{{"g1", fn(inst[0])}, {"phi", fn(inst[1])}, {"xi", fn(inst[2])}}, {{"beta", beta}}});
      break;
    case InequalityId::SOLUTION_EST_5_2:
      for (const auto& inst : grid.first_kind_instances) {
        const NamedFunctions fs{{"g", fn(inst[0])}, {"phi", fn(inst[1])}, {"xi", fn(inst[2])}};
        out.push_back({fs, {{"beta", beta}}});
        if (grid.chained_tuple.size() == 4) {
          const auto& t = grid.chained_tuple;
          out.push_back({fs, {{"beta", beta}, {"p", t[0]}, {"q", t[1]}, {"r", t[2]}, {"s", t[3]}}});
        }
      }
      break;
  }
  return out;
}

}  // namespace

SuiteResult run_suite(const std::vector<InequalityId>& ids, const std::vector<LabelPair>& pairs,
                      const ParameterGrid& grid, const QuadratureSpec& quad, double slack) {
  SuiteResult result;
  CheckContext ctx(quad);
  for (InequalityId id : ids) {
    std::vector<Instance> instances;
    try {
      instances = instances_for(id, pairs, grid);
    } catch (const Error& e) {
      result.errors.push_back({id, "", e.what()});
      continue;
    }
    for (const auto& inst : instances) {
      try {
        result.reports.push_back(check_inequality(id, inst.functions, inst.parameters, ctx, slack));
      } catch (const Error& e) {
        result.errors.push_back({id, describe(inst), e.what()});
      }
    }
  }
  std::stable_sort(result.reports.begin(), result.reports.end(),
                   [](const InequalityReport& a, const InequalityReport& b) { return a.ratio > b.ratio; });
  return result;
}

}  // namespace klconv
