#pragma once

#include <string>

namespace locspec {

/// Tolerance configuration shared by the analysis pipeline and the CLI.
/// Relative tolerances are scaled internally as documented per check.
struct Config {
  double tol_eig = 1e-8;   // eigenvalue clustering gap, x max(1, ||A||_F)
  double tol_m = 1e-10;    // zero-multiplicity threshold
  double tol_poly = 1e-8;  // polynomial identities, x max(1, p_k(mu_0))
  double tol_vec = 1e-8;   // vector residuals, relative to the target norm
  double tol_int = 1e-9;   // intersection-function spreads, x lambda_0
  double tol_ex = 1e-8;    // spectral excess / multiplicity slack, x rhs
  unsigned long seed = 0;
  std::string format = "json";
};

}  // namespace locspec
