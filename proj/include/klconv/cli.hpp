#pragma once

#include <iosfwd>

namespace klconv {

/// Process exit codes of the command-line driver.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,   // a strict inequality or a certification failed
  kExitInputError = 2,    // bad arguments, labels, grids, config or problem files
  kExitComputeError = 3,  // quadrature or spectral-division failure
};

/// Entry point of the `klconv` executable.
///
///   klconv [--config FILE] [--format csv|json] [--output PATH] transform fc|fs|kl LABEL --grid a:b:h
///   klconv [...] verify identities|inequalities|all [--seed N]
///   klconv [...] solve first|second PROBLEM.json --grid a:b:h
///
/// The report goes to --output (or the config's output_path) and otherwise to
/// `out`; diagnostics and discrepancy notes go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace klconv
