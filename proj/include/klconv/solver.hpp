#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "klconv/function.hpp"
#include "klconv/quadrature.hpp"
#include "klconv/transforms.hpp"

namespace klconv {

/// f + (1 - d^2/dx^2)(f *_{Fc} g) = h with g = sech *_{Fc} g1 and h = phi *_gamma xi.
struct SecondKindProblem {
  RealFunction g1;
  RealFunction phi;
  RealFunction xi;
  double beta = 0.5;
  QuadratureSpec quad;
};

/// (1 - d^2/dx^2)(f *_{Fc} g) = h with h = psi *_gamma xi and psi = phi *_{Fs,Fc} g.
struct FirstKindProblem {
  RealFunction g;
  RealFunction phi;
  RealFunction xi;
  double beta = 0.5;
  QuadratureSpec quad;
};

struct SolveReport {
  std::string kind;  // "second" or "first"
  std::vector<double> x_grid;
  std::vector<double> solution;    // f on x_grid
  std::vector<double> rhs_samples; // h on x_grid
  RealFunction solution_function;  // f on [0, max_truncation], tabulated

  Spectrum ell_spectrum;                // second kind: (F_c ell)(y)
  std::vector<double> psi_samples;      // first kind: phi *_{Fs,Fc} sqrt(pi/2) e^{-t} on x_grid

  std::vector<double> residual_grid;
  std::vector<double> residual;         // relative residual per y
  double spectral_residual = 0.0;       // max relative residual on the certified range
  double small_y_abs_residual = 0.0;    // first kind: max absolute residual for y < 0.25
  double tolerance = 1e-3;
  double small_y_tolerance = 1e-4;

  double l1_estimate_lhs = 0.0;
  double l1_estimate_rhs = 0.0;
  bool l1_estimate_holds = false;
  std::map<std::string, double> norms;

  std::vector<std::string> discrepancies;  // lines prefixed "PAPER-DISCREPANCY:"
  bool pass = false;
};

/// Working y-grid for the second-kind residual: step 0.05 on [0, 6].
std::vector<double> second_kind_residual_grid();

/// First-kind residual grid: step 0.05 on [0, 0.25) followed by step 0.25 on [0.25, 6].
std::vector<double> first_kind_residual_grid();

/// Solves the second-kind equation through the ell spectrum 2A / (1 + 2A),
/// A = F_c(sech^3) F_c(g1), and certifies the transformed equation
/// (F_c f)[1 + (1 + y^2) F_c g] = F_c h on [0, 6].
///
/// Throws DenominatorNearZero when 1 + 2A < 1e-6 somewhere on the spectral grid.
SolveReport solve_second_kind(const SecondKindProblem& problem, std::span<const double> x_grid);

/// Solves the first-kind equation as f = (phi *_{Fs,Fc} sqrt(pi/2) e^{-t}) *_gamma xi
/// and certifies (1 + y^2)(F_c f)(F_c g) = sin y (F_s psi) K[xi].
///
/// Throws SpectralDivisionUnstable when |F_c g| < 1e-8 on the residual grid.
SolveReport solve_first_kind(const FirstKindProblem& problem, std::span<const double> x_grid);

struct DiffFactorizationReport {
  std::vector<double> grid;
  std::vector<double> lhs;  // (1 + y^2) F_c(f *_{Fc} g)
  std::vector<double> rhs;  // (1 + y^2) (F_c f)(F_c g)
  std::vector<double> residual;
  double max_residual = 0.0;
};

/// F_c[(1 - d^2/dx^2)(f *_{Fc} g)] against (1 + y^2)(F_c f)(F_c g). The second
/// derivative acts on the spectral side as the factor (1 + y^2); the cosine
/// convolution itself is computed in physical space.
DiffFactorizationReport diff_factorization_check(const RealFunction& f, const RealFunction& g,
                                                 std::span<const double> y_grid,
                                                 const QuadratureSpec& quad = {});

}  // namespace klconv
