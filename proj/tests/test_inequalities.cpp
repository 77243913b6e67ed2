#include <cmath>
#include <numbers>

#include "doctest.h"
#include "klconv/catalog.hpp"
#include "klconv/errors.hpp"
#include "klconv/inequalities.hpp"
#include "oracles.hpp"

using namespace klconv;

namespace {
RealFunction fn(const char* label) { return catalog_function(label); }
const double kBesselHalfNormOfExp = 1.5206919926018927;  // int K0(x/2) e^{-x} dx
}  // namespace

TEST_CASE("id names round-trip") {
  const auto ids = all_inequality_ids();
  CHECK(ids.size() == 12);
  for (InequalityId id : ids) CHECK(inequality_id_from_string(to_string(id)) == id);
  CHECK_THROWS_AS(inequality_id_from_string("NOT_AN_ID"), InputError);
}

TEST_CASE("L1 bound for exp * exp") {
  CheckContext ctx;
  const auto r = check_inequality(InequalityId::L1_BOUND_2_3, {{"f", fn("exp_decay")}, {"g", fn("exp_decay")}},
                                  {{"beta", 0.5}}, ctx);
  CHECK(r.rhs == doctest::Approx(2.0 * kBesselHalfNormOfExp).epsilon(1e-9));
  // Independent left side: |c| integrated by Simpson over samples of the tabulated convolution.
  const RealFunction& c = ctx.generalized(fn("exp_decay"), fn("exp_decay"));
  CHECK(r.lhs == doctest::Approx(oracle::simpson([&](double x) { return std::abs(c(x)); }, 0.0, 40.0, 40000)).epsilon(1e-6));
  // 20-digit mpmath value of ||e^{-t} *gamma e^{-t}||_1; the convolution changes sign near x = 1.8748.
  CHECK(r.lhs == doctest::Approx(0.2077801349449846584).epsilon(1e-8));
  CHECK(c(0.0) == doctest::Approx(0.09370558024287805).epsilon(1e-9));
  CHECK(r.pass == true);
  CHECK(r.mode == CheckMode::strict);
  CHECK(r.ratio == doctest::Approx(r.lhs / r.rhs));
  CHECK(r.functions.at("f") == "exp_decay");
}

TEST_CASE("Young-type norm inequality at (4/3, 4/3, 2)") {
  const auto r = check_inequality(InequalityId::YOUNG_NORM_3_10, {{"f", fn("exp_decay")}, {"g", fn("gauss")}},
                                  {{"p", 4.0 / 3}, {"q", 4.0 / 3}, {"r", 2.0}, {"beta", 0.5}});
  CHECK(r.pass == true);
  CHECK(r.rhs > 0.0);
}

TEST_CASE("exponent relations are enforced") {
  const NamedFunctions fg{{"f", fn("exp_decay")}, {"g", fn("exp_decay")}};
  const NamedFunctions fgh{{"f", fn("exp_decay")}, {"g", fn("exp_decay")}, {"h", fn("gauss")}};
  CHECK_THROWS_AS(check_inequality(InequalityId::YOUNG_TRIPLE_3_2, fgh, {{"p", 3}, {"q", 3}, {"r", 3}, {"beta", 0.5}}),
                  ParameterRelationViolated);
  CHECK_THROWS_AS(check_inequality(InequalityId::YOUNG_TRIPLE_3_2, fgh, {{"p", 2}, {"q", 4}, {"r", 4}, {"beta", 0.5}}),
                  ParameterRelationViolated);
  // p = q = r = 2 is outside the Young relation, so the L2 case is rejected up front.
  CHECK_THROWS_AS(check_inequality(InequalityId::YOUNG_NORM_3_10, fg, {{"p", 2}, {"q", 2}, {"r", 2}, {"beta", 0.5}}),
                  ParameterRelationViolated);
  CHECK_THROWS_AS(check_inequality(InequalityId::LINF_3_12, fg, {{"p", 2}, {"q", 3}, {"beta", 0.5}}),
                  ParameterRelationViolated);
  CHECK_THROWS_AS(check_inequality(InequalityId::LINF_3_12, fg, {{"p", 1}, {"q", 1e300}, {"beta", 0.5}}),
                  ParameterRelationViolated);
  CHECK_THROWS_AS(check_inequality(InequalityId::L1_BOUND_2_3, fg, {{"beta", 1.5}}), ParameterRelationViolated);
  CHECK_THROWS_AS(check_inequality(InequalityId::L1_BOUND_2_3, fg, {}), InputError);
  CHECK_THROWS_AS(check_inequality(InequalityId::L1_BOUND_2_3, {{"f", fn("exp_decay")}}, {{"beta", 0.5}}), InputError);
  CHECK_THROWS_AS(check_inequality(InequalityId::TWO_PARAM_3_13, fg,
                                   {{"p", 2}, {"q", 2}, {"s", 0.5}, {"gamma1", 0}, {"gamma2", 1}, {"beta", 0.5}}),
                  ParameterRelationViolated);
  CHECK_NOTHROW(check_inequality(InequalityId::YOUNG_TRIPLE_3_2, fgh, {{"p", 1.5}, {"q", 1.5}, {"r", 1.5}, {"beta", 0.5}}));
}

TEST_CASE("zero function gives lhs = 0 and a pass") {
  const NamedFunctions fg{{"f", RealFunction()}, {"g", fn("sech")}};
  for (auto [id, params] : std::vector<std::pair<InequalityId, Parameters>>{
           {InequalityId::L1_BOUND_2_3, {{"beta", 0.5}}},
           {InequalityId::FC_CONV_L1_1_8, {}},
           {InequalityId::LINF_3_12, {{"p", 2}, {"q", 2}, {"beta", 0.5}}},
           {InequalityId::YOUNG_NORM_3_10, {{"p", 1.5}, {"q", 1.5}, {"r", 3}, {"beta", 0.5}}}}) {
    const auto r = check_inequality(id, fg, params);
    CHECK(r.lhs == 0.0);
    CHECK(r.ratio == 0.0);
    CHECK(r.pass == true);
  }
}

TEST_CASE("property: scaling f scales both sides, ratio invariant") {
  CheckContext ctx;
  const RealFunction f = fn("t_exp");
  const RealFunction g = fn("sech");
  const auto base = check_inequality(InequalityId::L1_BOUND_2_3, {{"f", f}, {"g", g}}, {{"beta", 0.5}}, ctx);
  for (double c : {-3.0, 0.25, 7.5}) {
    const RealFunction cf = linear_combination(c, f, 0.0, RealFunction(), "c*t_exp@" + std::to_string(c));
    const auto scaled = check_inequality(InequalityId::L1_BOUND_2_3, {{"f", cf}, {"g", g}}, {{"beta", 0.5}}, ctx);
    CHECK(scaled.lhs == doctest::Approx(std::abs(c) * base.lhs).epsilon(1e-8));
    CHECK(scaled.rhs == doctest::Approx(std::abs(c) * base.rhs).epsilon(1e-8));
    CHECK(std::abs(scaled.ratio - base.ratio) <= 1e-8);
  }
}

TEST_CASE("two-parameter family reports both constants") {
  const auto r = check_inequality(InequalityId::TWO_PARAM_3_13, {{"f", fn("exp_decay")}, {"g", fn("exp_decay")}},
                                  {{"p", 2}, {"q", 2}, {"s", 2}, {"gamma1", 1}, {"gamma2", 2}, {"beta", 0.5}});
  CHECK(r.pass == true);
  CHECK(r.audit.at("gamma_integral_numeric") == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(r.audit.at("gamma_integral_closed_form") == doctest::Approx(0.25));
  CHECK(r.audit.at("gamma_integral_printed_form") == doctest::Approx(1.0));
  CHECK(r.audit.at("rhs_printed_constant") > r.rhs);
}

TEST_CASE("Saitoh-type checks are ratio-only") {
  const auto r = check_inequality(InequalityId::SAITOH_4_1,
                                  {{"F1", fn("gauss")}, {"F2", fn("sech")}, {"rho1", fn("exp_decay")}, {"rho2", fn("exp_decay")}},
                                  {{"p", 2.0}});
  CHECK(r.mode == CheckMode::ratio_only);
  CHECK_FALSE(r.pass.has_value());
  CHECK(std::isfinite(r.ratio));
  CHECK(r.rhs > 0.0);
  const auto c = check_inequality(InequalityId::SAITOH_COR_4_6,
                                  {{"F1", fn("gauss")}, {"F2", fn("sech")}, {"rho2", fn("exp_decay")}}, {{"p", 1.5}});
  CHECK(c.mode == CheckMode::ratio_only);
  CHECK_FALSE(c.pass.has_value());
  CHECK(c.audit.count("k0_factor_at_v_1") == 1);
}

TEST_CASE("classical-convolution bounds") {
  const NamedFunctions pg{{"phi", fn("exp_decay")}, {"g", fn("exp_decay")}};
  const auto fc = check_inequality(InequalityId::FC_CONV_L1_1_8, {{"f", fn("exp_decay")}, {"g", fn("exp_decay")}}, {});
  // For positive f, g the cosine convolution has ||f*g||_1 = sqrt(2/pi) ||f||_1 ||g||_1 exactly.
  CHECK(fc.lhs == doctest::Approx(std::sqrt(2.0 / std::numbers::pi)).epsilon(1e-8));
  CHECK(fc.ratio == doctest::Approx(0.5).epsilon(1e-8));
  const auto sc = check_inequality(InequalityId::SC_CONV_L1_PROP, pg, {});
  // (e * e)_{Fs,Fc}(x) = x e^{-x} / sqrt(2 pi), whose L1 norm is 1 / sqrt(2 pi).
  CHECK(sc.lhs == doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-8));
  CHECK(sc.pass == true);
  const auto young = check_inequality(InequalityId::SC_CONV_YOUNG_PROP, pg, {{"p", 4.0 / 3}, {"q", 4.0 / 3}, {"r", 2}});
  CHECK(young.pass == true);
}

TEST_CASE("solution estimates") {
  CheckContext ctx;
  const NamedFunctions second{{"g1", fn("exp_decay")}, {"phi", fn("exp_decay")}, {"xi", fn("exp_decay")}};
  const auto r1 = check_inequality(InequalityId::SOLUTION_EST_5_1, second, {{"beta", 0.5}}, ctx);
  CHECK(r1.pass == true);
  CHECK(r1.audit.at("spectral_residual") <= 1e-3);
  const NamedFunctions first{{"g", fn("half_pi_exp")}, {"phi", fn("exp_decay")}, {"xi", fn("exp_decay")}};
  const auto r2 = check_inequality(InequalityId::SOLUTION_EST_5_2, first, {{"beta", 0.5}}, ctx);
  CHECK(r2.pass == true);
  CHECK(r2.rhs == doctest::Approx(4.0).epsilon(1e-10));
  const auto chained = check_inequality(InequalityId::SOLUTION_EST_5_2, first,
                                        {{"beta", 0.5}, {"p", 1.2}, {"q", 1.5}, {"r", 1.2}, {"s", 3.0}}, ctx);
  CHECK(chained.pass == true);
  CHECK_THROWS_AS(check_inequality(InequalityId::SOLUTION_EST_5_2, first,
                                   {{"beta", 0.5}, {"p", 1.5}, {"q", 1.5}, {"r", 1.5}, {"s", 3.0}}, ctx),
                  ParameterRelationViolated);
}

TEST_CASE("suite plumbing") {
  CHECK(ordered_pairs({"a", "b"}).size() == 4);
  CHECK(run_suite({}, ordered_pairs(inequality_catalog()), ParameterGrid{}).reports.empty());

  const std::vector<LabelPair> pairs = {{"exp_decay", "exp_decay"}, {"t_exp", "exp_decay"}, {"gauss", "sech"},
                                        {"sech", "exp2_decay"}, {"exp2_decay", "t_exp"}};
  const auto res = run_suite({InequalityId::L1_BOUND_2_3, InequalityId::LINF_3_12}, pairs, ParameterGrid{});
  CHECK(res.reports.size() >= 10);
  CHECK(res.errors.empty());
  CHECK(res.all_strict_pass());
  for (std::size_t i = 1; i < res.reports.size(); ++i) CHECK(res.reports[i - 1].ratio >= res.reports[i].ratio);

  ParameterGrid bad;
  bad.linf_pairs = {{2.0, 3.0}};
  const auto with_errors = run_suite({InequalityId::LINF_3_12}, {{"exp_decay", "sech"}}, bad);
  CHECK(with_errors.reports.empty());
  CHECK(with_errors.errors.size() == 1);
  CHECK_FALSE(with_errors.all_strict_pass());
}
