#include "locspec/spectrum.hpp"

#include <Eigen/Jacobi>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace locspec {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) s += 2.0 * a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

EigenPairs jacobi_eigensolver(Eigen::MatrixXd a, double sweep_tol,
                              int max_sweeps) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw GraphError("jacobi: matrix not square");
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double scale = a.norm();

  if (scale > 0.0) {
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      if (off_diagonal_norm(a) < sweep_tol * scale) {
        converged = true;
        break;
      }
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) {
          if (a(p, q) == 0.0) continue;
          Eigen::JacobiRotation<double> rot;
          rot.makeJacobi(a(p, p), a(p, q), a(q, q));
          a.applyOnTheLeft(p, q, rot.adjoint());
          a.applyOnTheRight(p, q, rot);
          v.applyOnTheRight(p, q, rot);
        }
    }
    if (!converged && off_diagonal_norm(a) >= sweep_tol * scale)
      throw InternalInconsistency("jacobi eigensolver did not converge in " +
                                  std::to_string(max_sweeps) + " sweeps");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) > a(j, j); });
  EigenPairs out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]);
    out.vectors.col(i) = v.col(order[i]);
  }
  return out;
}

Spectrum spectral_decomposition(const Graph& g, double tol_eig) {
  const int n = g.vertex_count();
  Eigen::MatrixXd a = g.adjacency_matrix();
  const double gap_tol = tol_eig * std::max(1.0, a.norm());
  EigenPairs ep = jacobi_eigensolver(a);

  // Cluster the sorted eigenvalues into distinct ones.
  std::vector<std::pair<int, int>> clusters;  // [begin, end)
  int begin = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || ep.values[i - 1] - ep.values[i] > gap_tol) {
      clusters.emplace_back(begin, i);
      begin = i;
    }
  }

  Spectrum s;
  s.n = n;
  const int d1 = static_cast<int>(clusters.size());
  s.eigenvalues.resize(d1);
  s.pi.resize(d1);
  s.multiplicities.reserve(d1);
  s.projectors.reserve(d1);
  for (int l = 0; l < d1; ++l) {
    auto [b, e] = clusters[l];
    s.eigenvalues[l] = ep.values.segment(b, e - b).mean();
    s.multiplicities.push_back(e - b);
    const auto basis = ep.vectors.middleCols(b, e - b);
    s.projectors.push_back(basis * basis.transpose());
  }
  for (int l = 0; l < d1; ++l) {
    double prod = 1.0;
    for (int h = 0; h < d1; ++h)
      if (h != l) prod *= std::abs(s.eigenvalues[l] - s.eigenvalues[h]);
    s.pi[l] = prod;
  }

  if (s.multiplicities[0] != 1)
    throw InternalInconsistency(
        "largest eigenvalue is not simple; eigenvalue clustering tolerance "
        "is misconfigured for a connected graph");

  Eigen::VectorXd nu = ep.vectors.col(0);
  if (nu.sum() < 0.0) nu = -nu;
  const double min_entry = nu.minCoeff();
  if (min_entry <= 0.0)
    throw InternalInconsistency(
        "Perron eigenvector has a non-positive entry");
  s.perron = nu / min_entry;
  s.perron_norm_sq = s.perron.squaredNorm();
  return s;
}

Eigen::VectorXd project(const Spectrum& s, int l, const Eigen::VectorXd& u) {
  if (l < 0 || l >= s.count())
    throw GraphError("eigenvalue index " + std::to_string(l) +
                     " out of range");
  if (u.size() != s.n)
    throw GraphError("vector length does not match vertex count");
  return s.projectors[l] * u;
}

Eigen::VectorXd apply_polynomial(const Graph& g, const Polynomial& p,
                                 const Eigen::VectorXd& u) {
  if (u.size() != g.vertex_count())
    throw GraphError("vector length does not match vertex count");
  const auto& c = p.coeffs();
  Eigen::VectorXd acc = c.back() * u;
  for (auto it = std::next(c.rbegin()); it != c.rend(); ++it)
    acc = g.multiply_adjacency(acc) + *it * u;
  return acc;
}

Polynomial lagrange_interpolator(const Spectrum& s, int l) {
  if (l < 0 || l >= s.count())
    throw GraphError("eigenvalue index " + std::to_string(l) +
                     " out of range");
  Polynomial z = Polynomial::constant(1.0);
  double denom = 1.0;
  for (int h = 0; h < s.count(); ++h) {
    if (h == l) continue;
    z = z.times_linear(s.eigenvalues[h]);
    denom *= s.eigenvalues[l] - s.eigenvalues[h];
  }
  return z * (1.0 / denom);
}

}  // namespace locspec
