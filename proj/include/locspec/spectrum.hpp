#pragma once

#include <Eigen/Dense>
#include <vector>

#include "locspec/graph.hpp"
#include "locspec/polynomial.hpp"

namespace locspec {

/// Eigenvalues (descending) with matching orthonormal eigenvector columns.
struct EigenPairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Cyclic Jacobi sweeps on a dense symmetric matrix.  Converged when the
/// off-diagonal Frobenius mass drops below sweep_tol * ||A||_F.
EigenPairs jacobi_eigensolver(Eigen::MatrixXd sym, double sweep_tol = 1e-14,
                              int max_sweeps = 100);

/// Spectral decomposition of an adjacency matrix: distinct eigenvalues,
/// their multiplicities and orthogonal projectors, the Perron vector nu
/// (positive, minimum entry 1), and the moment-like products
/// pi_l = prod_{h != l} |lambda_l - lambda_h|.
struct Spectrum {
  Eigen::VectorXd eigenvalues;  // distinct, descending
  std::vector<int> multiplicities;
  std::vector<Eigen::MatrixXd> projectors;
  Eigen::VectorXd pi;
  Eigen::VectorXd perron;
  double perron_norm_sq = 0.0;
  int n = 0;

  int count() const { return static_cast<int>(eigenvalues.size()); }
  int max_index() const { return count() - 1; }
  double lambda0() const { return eigenvalues[0]; }
};

/// Full decomposition of g's adjacency matrix.  Eigenvalues closer than
/// tol_eig * max(1, ||A||_F) are clustered into one distinct eigenvalue;
/// the cluster representative is the mean of its members.
Spectrum spectral_decomposition(const Graph& g, double tol_eig = 1e-8);

/// E_l * u.
Eigen::VectorXd project(const Spectrum& s, int l, const Eigen::VectorXd& u);

/// p(A) * u by Horner with matrix-vector products.
Eigen::VectorXd apply_polynomial(const Graph& g, const Polynomial& p,
                                 const Eigen::VectorXd& u);

/// Lagrange interpolator Z_l on the distinct eigenvalues: Z_l(lambda_h) =
/// delta_lh, so Z_l(A) = E_l.
Polynomial lagrange_interpolator(const Spectrum& s, int l);

}  // namespace locspec
