#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klconv/function.hpp"
#include "klconv/quadrature.hpp"
#include "klconv/solver.hpp"
#include "klconv/spaces.hpp"

namespace klconv {

enum class InequalityId {
  L1_BOUND_2_3,
  FC_CONV_L1_1_8,
  YOUNG_TRIPLE_3_2,
  YOUNG_NORM_3_10,
  LINF_3_12,
  TWO_PARAM_3_13,
  SAITOH_4_1,
  SAITOH_COR_4_6,
  SC_CONV_L1_PROP,
  SC_CONV_YOUNG_PROP,
  SOLUTION_EST_5_1,
  SOLUTION_EST_5_2,
};

const char* to_string(InequalityId id);
InequalityId inequality_id_from_string(const std::string& name);  // InputError when unknown
std::vector<InequalityId> all_inequality_ids();

enum class CheckMode { strict, ratio_only };
const char* to_string(CheckMode mode);

using NamedFunctions = std::map<std::string, RealFunction>;
using Parameters = std::map<std::string, double>;

struct InequalityReport {
  InequalityId id = InequalityId::L1_BOUND_2_3;
  std::map<std::string, std::string> functions;  // role -> label
  Parameters parameters;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs, 0 when both vanish
  std::optional<bool> pass;  // empty in ratio_only mode
  double slack = 1e-3;
  CheckMode mode = CheckMode::strict;
  std::map<std::string, double> audit;  // extra quantities (alternative constants, auxiliary norms)
};

/// Memoizes the expensive pieces of a check (tabulated convolutions,
/// norms, solver runs) by function label, so labels must identify functions
/// uniquely within one context.
class CheckContext {
 public:
  explicit CheckContext(QuadratureSpec quad = {});
  ~CheckContext();
  CheckContext(const CheckContext&) = delete;
  CheckContext& operator=(const CheckContext&) = delete;

  const QuadratureSpec& quad() const noexcept { return quad_; }

  /// (f *_gamma g), tabulated on [0, max_truncation].
  const RealFunction& generalized(const RealFunction& f, const RealFunction& g);
  /// (f *_{Fc} g) (sine_cosine = false) or (f *_{Fs,Fc} g), tabulated.
  const RealFunction& classical(bool sine_cosine, const RealFunction& f, const RealFunction& g);
  double norm(const RealFunction& f, const WeightedNormSpec& spec);
  const SolveReport& second_kind(const RealFunction& g1, const RealFunction& phi, const RealFunction& xi,
                                 double beta);
  const SolveReport& first_kind(const RealFunction& g, const RealFunction& phi, const RealFunction& xi,
                                double beta);

  struct Cache;

 private:
  QuadratureSpec quad_;
  std::unique_ptr<Cache> cache_;
};

/// Evaluates both sides of one inequality instance.
///
/// Function roles and parameters per id:
///   L1_BOUND_2_3        f, g              beta
///   FC_CONV_L1_1_8      f, g
///   YOUNG_TRIPLE_3_2    f, g, h           p, q, r, beta     (1/p + 1/q + 1/r = 2)
///   YOUNG_NORM_3_10     f, g              p, q, r, beta     (1/p + 1/q = 1 + 1/r)
///   LINF_3_12           f, g              p, q, beta        (1/p + 1/q = 1)
///   TWO_PARAM_3_13      f, g              p, q, s, gamma1, gamma2, beta
///   SAITOH_4_1          F1, F2, rho1, rho2  p               (ratio only)
///   SAITOH_COR_4_6      F1, F2, rho2        p               (ratio only)
///   SC_CONV_L1_PROP     phi, g
///   SC_CONV_YOUNG_PROP  phi, g            p, q, r           (1/p + 1/q = 1 + 1/r)
///   SOLUTION_EST_5_1    g1, phi, xi       beta
///   SOLUTION_EST_5_2    g, phi, xi        beta [, p, q, r, s with 1/p + 1/q + 1/r = 2 + 1/s]
///
/// Throws ParameterRelationViolated when an exponent relation misses by more
/// than 1e-12 or an exponent leaves its range, and InputError for a missing
/// role or parameter.
InequalityReport check_inequality(InequalityId id, const NamedFunctions& functions,
                                  const Parameters& parameters, CheckContext& context,
                                  double slack = 1e-3);

InequalityReport check_inequality(InequalityId id, const NamedFunctions& functions,
                                  const Parameters& parameters, const QuadratureSpec& quad = {},
                                  double slack = 1e-3);

/// Parameter sets per id and the functions that complete each instance.
struct ParameterGrid {
  std::vector<double> l1_betas = {0.5, 1.0};
  std::vector<std::vector<double>> young_triples = {{1.5, 1.5, 1.5}, {4.0 / 3, 4.0 / 3, 2.0}, {2.0, 4.0 / 3, 4.0 / 3}};
  std::vector<std::string> young_test_functions = {"exp_decay", "gauss"};
  std::vector<std::vector<double>> young_norm_triples = {{4.0 / 3, 4.0 / 3, 2.0}, {1.5, 1.5, 3.0}, {2.0, 4.0 / 3, 4.0}};
  std::vector<std::vector<double>> linf_pairs = {{2.0, 2.0}, {1.5, 3.0}, {3.0, 1.5}};
  std::vector<std::vector<double>> two_param_pq = {{2.0, 2.0}};
  std::vector<double> two_param_s = {1.0, 2.0};
  std::vector<std::vector<double>> two_param_gammas = {{0.5, 1.0}, {1.0, 2.0}};
  std::vector<double> saitoh_p = {1.5};
  std::string saitoh_rho = "exp_decay";
  std::vector<std::vector<double>> sc_young_triples = {{4.0 / 3, 4.0 / 3, 2.0}, {1.5, 1.5, 3.0}};
  std::vector<std::vector<std::string>> second_kind_instances = {{"exp_decay", "exp_decay", "exp_decay"},
                                                                 {"gauss", "t_exp", "exp2_decay"}};
  std::vector<std::vector<std::string>> first_kind_instances = {{"half_pi_exp", "exp_decay", "exp_decay"},
                                                                {"exp_decay", "sech", "gauss"}};
  std::vector<double> chained_tuple = {1.2, 1.5, 1.2, 3.0};  // (p, q, r, s)
  double beta = 0.5;
};

struct SuiteError {
  InequalityId id = InequalityId::L1_BOUND_2_3;
  std::string instance;
  std::string message;
};

struct SuiteResult {
  std::vector<InequalityReport> reports;  // sorted by ratio, largest first
  std::vector<SuiteError> errors;

  /// True when no strict report failed and no check errored.
  bool all_strict_pass() const;
};

using LabelPair = std::pair<std::string, std::string>;

/// Every ordered pair (a, b) of labels, a and b possibly equal.
std::vector<LabelPair> ordered_pairs(const std::vector<std::string>& labels);

/// Runs every id over `pairs` (labels resolved through the function catalog)
/// and the admissible parameter sets of `grid`. Solution-estimate ids use the
/// problem instances of `grid` instead of the pairs. Per-check errors are
/// collected, not thrown.
SuiteResult run_suite(const std::vector<InequalityId>& ids, const std::vector<LabelPair>& pairs,
                      const ParameterGrid& grid, const QuadratureSpec& quad = {}, double slack = 1e-3);

}  // namespace klconv
