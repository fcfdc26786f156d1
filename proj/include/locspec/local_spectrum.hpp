#pragma once

#include <Eigen/Dense>
#include <vector>

#include "locspec/graph.hpp"
#include "locspec/polynomial.hpp"
#include "locspec/spectrum.hpp"

namespace locspec {

/// rho C = sum_{i in C} nu_i e_i, with its squared norm and unit
/// normalization e_C.
struct WeightedSetVector {
  Eigen::VectorXd rho;
  double norm_sq = 0.0;
  Eigen::VectorXd unit;
};

WeightedSetVector rho_vector(const Spectrum& s, const VertexSet& c);

/// The C-local spectrum: eigenvalues mu_0 > ... > mu_{d_C} whose
/// C-multiplicity m_C(lambda_l) = ||E_l e_C||^2 exceeds tol_m, with the
/// moment-like products pi_l(C) taken over the retained eigenvalues and the
/// map back to global eigenvalue indices.
struct LocalSpectrum {
  Eigen::VectorXd mu;
  Eigen::VectorXd mult;
  Eigen::VectorXd pi;
  std::vector<int> parent_index;   // local l -> global eigenvalue index
  Eigen::VectorXd mult_all;        // m_C over every global eigenvalue
  double discarded_mass = 0.0;     // sum of multiplicities below tol_m

  int dual_degree() const { return static_cast<int>(mu.size()) - 1; }
  /// Global eigenvalue indices with m_C above threshold, ascending.
  const std::vector<int>& support() const { return parent_index; }
};

LocalSpectrum local_spectrum(const Spectrum& s, const VertexSet& c,
                             double tol_m = 1e-10);

struct ExtremalityReport {
  int eccentricity = 0;
  int dual_degree = 0;
  bool extremal = false;
};

/// Checks eccentricity(C) == dual degree d_C.  Raises InternalInconsistency
/// if the eccentricity exceeds d_C, which the theory forbids.
ExtremalityReport is_extremal(const Graph& g, const Spectrum& s,
                              const VertexSet& c, double tol_m = 1e-10);

/// Degree-d_C polynomial with Z_l(mu_h) = delta_lh on the local eigenvalues
/// (Lagrange normalization), so Z_l(A) e_C = E_l e_C.
Polynomial local_idempotent_polynomial(const LocalSpectrum& ls, int l);

}  // namespace locspec
