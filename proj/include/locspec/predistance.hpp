#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "locspec/local_spectrum.hpp"
#include "locspec/polynomial.hpp"

namespace locspec {

/// <p, q>_C = sum_l m_C(mu_l) p(mu_l) q(mu_l).
double local_inner_product(const Polynomial& p, const Polynomial& q,
                           const LocalSpectrum& ls);

/// The predistance polynomials p_0, ..., p_{d_C}: the orthogonal system for
/// the local measure with deg p_k = k and <p_k, p_k>_C = p_k(mu_0), plus
/// the three-term recurrence x p_k = b_{k-1} p_{k-1} + a_k p_k +
/// c_{k+1} p_{k+1}.
///
/// a_rec[k], b_rec[k], c_rec[k] are indexed by k = 0..d_C; b_rec[d_C] and
/// c_rec[0] are the boundary zeros.  For k = d_C the recurrence holds in the
/// quotient ring, i.e. at the local eigenvalues only.
struct PredistanceSystem {
  std::vector<Polynomial> polys;
  Eigen::MatrixXd values;  // values(k, l) = p_k(mu_l)
  std::vector<double> a_rec, b_rec, c_rec;

  int dual_degree() const { return static_cast<int>(polys.size()) - 1; }
};

/// Stieltjes recursion on the discrete measure {(mu_l, m_C(mu_l))}: monic
/// orthogonal polynomials first, then rescaled by q_k(mu_0)/<q_k, q_k>_C.
PredistanceSystem predistance_polynomials(const LocalSpectrum& ls,
                                          double tol_poly = 1e-8);

/// H_C = (||nu||^2 / (pi_0(C) ||rho C||^2)) prod_{l>=1} (x - mu_l), the
/// degree-d_C polynomial with H_C(A) rho C = nu.
Polynomial hoffman_polynomial(const LocalSpectrum& ls, double norm_nu_sq,
                              double norm_rho_sq);

/// Unique polynomial of degree <= d_C through (mu_l, values[l]).
Polynomial interpolate_on_local_spectrum(std::span<const double> values,
                                         const LocalSpectrum& ls);

}  // namespace locspec
