#include "locspec/local_spectrum.hpp"

#include <cmath>

namespace locspec {

WeightedSetVector rho_vector(const Spectrum& s, const VertexSet& c) {
  if (c.empty()) throw GraphError("rho of the empty set is excluded");
  WeightedSetVector w;
  w.rho = Eigen::VectorXd::Zero(s.n);
  for (int v : c.members) {
    if (v < 0 || v >= s.n)
      throw GraphError("set vertex " + std::to_string(v) + " out of range");
    w.rho[v] = s.perron[v];
  }
  w.norm_sq = w.rho.squaredNorm();
  w.unit = w.rho / std::sqrt(w.norm_sq);
  return w;
}

LocalSpectrum local_spectrum(const Spectrum& s, const VertexSet& c,
                             double tol_m) {
  const WeightedSetVector w = rho_vector(s, c);
  const int d1 = s.count();
  LocalSpectrum ls;
  ls.mult_all.resize(d1);
  for (int l = 0; l < d1; ++l)
    ls.mult_all[l] = (s.projectors[l] * w.unit).squaredNorm();

  std::vector<double> mu, mult;
  for (int l = 0; l < d1; ++l) {
    if (ls.mult_all[l] > tol_m) {
      mu.push_back(s.eigenvalues[l]);
      mult.push_back(ls.mult_all[l]);
      ls.parent_index.push_back(l);
    } else {
      ls.discarded_mass += ls.mult_all[l];
    }
  }
  ls.mu = Eigen::Map<Eigen::VectorXd>(mu.data(), mu.size());
  ls.mult = Eigen::Map<Eigen::VectorXd>(mult.data(), mult.size());
  ls.pi.resize(ls.mu.size());
  for (int l = 0; l < ls.mu.size(); ++l) {
    double prod = 1.0;
    for (int h = 0; h < ls.mu.size(); ++h)
      if (h != l) prod *= std::abs(ls.mu[l] - ls.mu[h]);
    ls.pi[l] = prod;
  }
  return ls;
}

ExtremalityReport is_extremal(const Graph& g, const Spectrum& s,
                              const VertexSet& c, double tol_m) {
  const DistancePartition dp = distance_partition(g, c);
  const LocalSpectrum ls = local_spectrum(s, c, tol_m);
  ExtremalityReport r;
  r.eccentricity = dp.eccentricity();
  r.dual_degree = ls.dual_degree();
  if (r.eccentricity > r.dual_degree)
    throw InternalInconsistency(
        "eccentricity " + std::to_string(r.eccentricity) +
        " exceeds dual degree " + std::to_string(r.dual_degree) +
        "; check the eigenvalue clustering / multiplicity tolerances");
  r.extremal = (r.eccentricity == r.dual_degree);
  return r;
}

Polynomial local_idempotent_polynomial(const LocalSpectrum& ls, int l) {
  if (l < 0 || l > ls.dual_degree())
    throw GraphError("local eigenvalue index " + std::to_string(l) +
                     " out of range");
  Polynomial z = Polynomial::constant(1.0);
  double denom = 1.0;
  for (int h = 0; h <= ls.dual_degree(); ++h) {
    if (h == l) continue;
    z = z.times_linear(ls.mu[h]);
    denom *= ls.mu[l] - ls.mu[h];
  }
  return z * (1.0 / denom);
}

}  // namespace locspec
