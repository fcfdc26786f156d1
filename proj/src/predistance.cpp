#include "locspec/predistance.hpp"

#include <cmath>

namespace locspec {

double local_inner_product(const Polynomial& p, const Polynomial& q,
                           const LocalSpectrum& ls) {
  double acc = 0.0;
  for (int l = 0; l < ls.mu.size(); ++l)
    acc += ls.mult[l] * p(ls.mu[l]) * q(ls.mu[l]);
  return acc;
}

PredistanceSystem predistance_polynomials(const LocalSpectrum& ls,
                                          double tol_poly) {
  const int d = ls.dual_degree();
  const int m = d + 1;
  const Eigen::VectorXd& mu = ls.mu;
  const Eigen::VectorXd& w = ls.mult;

  auto dot = [&](const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    return (w.array() * u.array() * v.array()).sum();
  };

  // Monic orthogonal family q_k by the Stieltjes recursion, kept in both
  // value-at-nodes and coefficient form.
  std::vector<Eigen::VectorXd> q_vals;
  std::vector<Polynomial> q_poly;
  std::vector<double> norm_sq(m), alpha(m), s(m);

  q_vals.push_back(Eigen::VectorXd::Ones(m));
  q_poly.push_back(Polynomial::constant(1.0));
  norm_sq[0] = dot(q_vals[0], q_vals[0]);

  for (int k = 0; k < m; ++k) {
    if (norm_sq[k] <= tol_poly)
      throw InternalInconsistency(
          "orthogonal polynomial recursion broke down at degree " +
          std::to_string(k) +
          "; the local measure is degenerate (check tol_m)");
    Eigen::VectorXd xq = mu.array() * q_vals[k].array();
    alpha[k] = dot(xq, q_vals[k]) / norm_sq[k];
    if (k == m - 1) break;
    Eigen::VectorXd next = xq - alpha[k] * q_vals[k];
    Polynomial next_poly = q_poly[k].times_linear(alpha[k]);
    if (k > 0) {
      const double beta = norm_sq[k] / norm_sq[k - 1];
      next -= beta * q_vals[k - 1];
      next_poly -= beta * q_poly[k - 1];
    }
    // The plain three-term recursion loses orthogonality for high-degree
    // systems with near-degenerate weights; reorthogonalize against the
    // whole family (two passes), in both value and coefficient form.
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j <= k; ++j) {
        const double corr = dot(next, q_vals[j]) / norm_sq[j];
        next -= corr * q_vals[j];
        next_poly -= corr * q_poly[j];
      }
    q_vals.push_back(std::move(next));
    q_poly.push_back(std::move(next_poly));
    norm_sq[k + 1] = dot(q_vals[k + 1], q_vals[k + 1]);
  }

  PredistanceSystem ps;
  ps.values.resize(m, m);
  // Scale factors come from the value-form recursion: evaluating the
  // expanded coefficients at mu_0 cancels catastrophically at high degree.
  for (int k = 0; k < m; ++k) {
    s[k] = q_vals[k][0] / norm_sq[k];
    ps.polys.push_back(s[k] * q_poly[k]);
    ps.values.row(k) = (s[k] * q_vals[k]).transpose();
  }

  ps.a_rec.assign(m, 0.0);
  ps.b_rec.assign(m, 0.0);
  ps.c_rec.assign(m, 0.0);
  for (int k = 0; k < m; ++k) ps.a_rec[k] = alpha[k];
  for (int k = 0; k < d; ++k) ps.b_rec[k] = q_vals[k + 1][0] / q_vals[k][0];
  for (int k = 1; k < m; ++k) ps.c_rec[k] = s[k - 1] / s[k];
  return ps;
}

Polynomial hoffman_polynomial(const LocalSpectrum& ls, double norm_nu_sq,
                              double norm_rho_sq) {
  Polynomial h = Polynomial::constant(1.0);
  for (int l = 1; l <= ls.dual_degree(); ++l) h = h.times_linear(ls.mu[l]);
  return h * (norm_nu_sq / (ls.pi[0] * norm_rho_sq));
}

Polynomial interpolate_on_local_spectrum(std::span<const double> values,
                                         const LocalSpectrum& ls) {
  if (static_cast<int>(values.size()) != ls.mu.size())
    throw GraphError("value count does not match the local spectrum size");
  std::vector<double> nodes(ls.mu.data(), ls.mu.data() + ls.mu.size());
  return Polynomial::interpolate(nodes, values);
}

}  // namespace locspec
