#include "locspec/code_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace locspec {

namespace {

CheckOutcome make_outcome(double margin, double threshold) {
  CheckOutcome o;
  o.ran = true;
  o.margin = margin;
  o.threshold = threshold;
  o.pass = margin <= threshold;
  o.decisive = margin <= threshold / 10.0 || margin >= threshold * 10.0;
  return o;
}

std::set<int> support_set(const LocalSpectrum& ls) {
  return {ls.parent_index.begin(), ls.parent_index.end()};
}

}  // namespace

IntersectionData intersection_functions(const Graph& g, const Spectrum& s,
                                        const DistancePartition& dp) {
  const int n = g.vertex_count();
  const int ecc = dp.eccentricity();
  IntersectionData id;
  id.c.assign(n, 0.0);
  id.a.assign(n, 0.0);
  id.b.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const int k = dp.depth[i];
    double cw = 0.0, aw = 0.0, bw = 0.0;
    for (int j : g.neighbors(i)) {
      if (dp.depth[j] == k - 1)
        cw += s.perron[j];
      else if (dp.depth[j] == k)
        aw += s.perron[j];
      else
        bw += s.perron[j];
    }
    id.c[i] = cw / s.perron[i];
    id.a[i] = aw / s.perron[i];
    id.b[i] = bw / s.perron[i];
    id.sum_identity_max_dev =
        std::max(id.sum_identity_max_dev,
                 std::abs(id.c[i] + id.a[i] + id.b[i] - s.lambda0()));
  }
  for (int k = 0; k <= ecc; ++k) {
    auto stats = [&](const std::vector<double>& f, std::vector<double>& mean,
                     std::vector<double>& spread) {
      double lo = f[dp.layers[k].members.front()], hi = lo, sum = 0.0;
      for (int v : dp.layers[k].members) {
        lo = std::min(lo, f[v]);
        hi = std::max(hi, f[v]);
        sum += f[v];
      }
      mean.push_back(sum / dp.layers[k].size());
      spread.push_back(hi - lo);
      id.max_spread = std::max(id.max_spread, hi - lo);
    };
    stats(id.c, id.c_layer, id.c_spread);
    stats(id.a, id.a_layer, id.a_spread);
    stats(id.b, id.b_layer, id.b_spread);
  }
  return id;
}

CheckOutcome check_combinatorial(const IntersectionData& id, double lambda0,
                                 double tol_int) {
  return make_outcome(id.max_spread, tol_int * std::max(1.0, lambda0));
}

Theorem1Result check_theorem1(const Graph& g, const Spectrum& s,
                              const VertexSet& c, const DistancePartition& dp,
                              const PredistanceSystem& ps, double tol_vec,
                              double tol_m) {
  const int ecc = dp.eccentricity();
  if (ecc > ps.dual_degree())
    throw InternalInconsistency(
        "eccentricity exceeds the dual degree; tolerances misconfigured");
  const WeightedSetVector rho_c = rho_vector(s, c);
  Theorem1Result r;
  double worst = 0.0;
  for (int k = 0; k <= ecc; ++k) {
    const WeightedSetVector rho_k = rho_vector(s, dp.layers[k]);
    const Eigen::VectorXd image = apply_polynomial(g, ps.polys[k], rho_c.rho);
    const double res = (rho_k.rho - image).norm() / rho_k.rho.norm();
    r.residuals.push_back(res);
    worst = std::max(worst, res);
  }
  r.outcome = make_outcome(worst, tol_vec);
  return r;
}

CollinearityResult check_collinearity(const Graph& g, const Spectrum& s,
                                      const VertexSet& c, const VertexSet& d,
                                      double tol_m, double tol_vec) {
  const WeightedSetVector rho_c = rho_vector(s, c);
  const WeightedSetVector rho_d = rho_vector(s, d);
  const LocalSpectrum ls = local_spectrum(s, c, tol_m);
  const double norm_d = rho_d.rho.norm();

  CollinearityResult r;
  double z_sq = 0.0;
  double worst = 0.0;
  std::set<int> in_c = support_set(ls);
  for (int l = 0; l < s.count(); ++l) {
    const Eigen::VectorXd pc = s.projectors[l] * rho_c.rho;
    const Eigen::VectorXd pd = s.projectors[l] * rho_d.rho;
    if (in_c.count(l)) {
      const double alpha = pc.dot(pd) / pc.squaredNorm();
      r.alpha.push_back(alpha);
      const double res = (pd - alpha * pc).norm() / norm_d;
      r.residuals.push_back(res);
      worst = std::max(worst, res);
    } else {
      z_sq += pd.squaredNorm();
    }
  }
  r.z_norm = std::sqrt(z_sq) / norm_d;
  worst = std::max(worst, r.z_norm);
  r.outcome = make_outcome(worst, tol_vec);

  r.candidate = interpolate_on_local_spectrum(r.alpha, ls);
  for (double a : r.alpha) r.candidate_values.push_back(a);
  const Eigen::VectorXd image = apply_polynomial(g, r.candidate, rho_c.rho);
  r.antipodal_residual = (rho_d.rho - image).norm() / norm_d;
  return r;
}

ExcessResult check_spectral_excess(const VertexSet& c, const VertexSet& d,
                                   const Spectrum& s, const LocalSpectrum& ls,
                                   double tol_ex) {
  const WeightedSetVector rho_c = rho_vector(s, c);
  const WeightedSetVector rho_d = rho_vector(s, d);
  ExcessResult r;
  r.lhs = rho_d.norm_sq / rho_c.norm_sq;
  double denom = 0.0;
  for (int l = 0; l <= ls.dual_degree(); ++l)
    denom += 1.0 / (ls.mult[l] * ls.pi[l] * ls.pi[l]);
  r.rhs = (1.0 / (ls.mult[0] * ls.mult[0] * ls.pi[0] * ls.pi[0])) / denom;
  if (r.lhs > r.rhs * (1.0 + 10.0 * tol_ex))
    throw InternalInconsistency(
        "spectral excess bound violated (lhs = " + std::to_string(r.lhs) +
        ", rhs = " + std::to_string(r.rhs) + ")");
  const double margin = std::max(0.0, (r.rhs - r.lhs) / r.rhs);
  r.outcome = make_outcome(margin, tol_ex);
  return r;
}

Prop1Result check_prop1_inequality(const Spectrum& s, const VertexSet& c,
                                   const VertexSet& d, const LocalSpectrum& ls,
                                   double tol_m, double tol_ex) {
  const WeightedSetVector rho_c = rho_vector(s, c);
  const WeightedSetVector rho_d = rho_vector(s, d);
  const LocalSpectrum ls_d = local_spectrum(s, d, tol_m);
  const double cross = rho_c.norm_sq * rho_d.norm_sq /
                       (s.perron_norm_sq * s.perron_norm_sq);

  Prop1Result r;
  r.ev_subset = true;
  r.min_slack = 0.0;
  for (int l = 0; l <= ls.dual_degree(); ++l) {
    const int gl = ls.parent_index[l];
    if (ls_d.mult_all[gl] <= tol_m) r.ev_subset = false;
    const double ratio = ls.pi[0] / ls.pi[l];
    const double bound = ratio * ratio * cross;
    const double slack = ls.mult[l] * ls_d.mult_all[gl] - bound;
    r.slack.push_back(slack);
    r.min_slack = std::min(r.min_slack, slack);
    if (slack < -tol_ex * std::max(1.0, bound))
      throw InternalInconsistency(
          "multiplicity product inequality violated at local eigenvalue " +
          std::to_string(l));
    r.equality.push_back(slack <= tol_ex * std::max(1.0, bound));

    // Clause (i): equality iff the two eigenspace projections are collinear.
    const Eigen::VectorXd zc = s.projectors[gl] * rho_c.unit;
    const Eigen::VectorXd zd = s.projectors[gl] * rho_d.unit;
    const double beta = zc.dot(zd) / zc.squaredNorm();
    r.collinearity_residual.push_back((zd - beta * zc).norm());
  }
  return r;
}

SubconstituentReport subconstituent_report(const Graph& g, const Spectrum& s,
                                           const VertexSet& c,
                                           const DistancePartition& dp,
                                           const PredistanceSystem& ps,
                                           const LocalSpectrum& ls,
                                           const Config& cfg, bool assertive) {
  SubconstituentReport rep;
  rep.ran = true;
  rep.assertive = assertive;
  const int ecc = dp.eccentricity();
  const WeightedSetVector rho_c = rho_vector(s, c);
  const std::set<int> ev_c = support_set(ls);
  const double ident_tol = 100.0 * cfg.tol_m;

  auto fail = [&](const std::string& what) {
    if (assertive)
      throw InternalInconsistency(
          "subconstituent consequence failed on a CPRC instance: " + what);
  };

  std::vector<std::set<int>> layer_ev(ecc + 1);
  for (int k = 0; k <= ecc; ++k) {
    const LocalSpectrum ls_k = local_spectrum(s, dp.layers[k], cfg.tol_m);
    const WeightedSetVector rho_k = rho_vector(s, dp.layers[k]);
    SubconstituentLayer layer;
    layer.ev = ls_k.parent_index;
    layer_ev[k] = support_set(ls_k);
    layer.dual_degree = ls_k.dual_degree();

    layer.subset_ok = std::includes(ev_c.begin(), ev_c.end(),
                                    layer_ev[k].begin(), layer_ev[k].end());
    if (!layer.subset_ok) fail("ev_{C_k} not contained in ev_C");

    layer.dual_bound_ok =
        layer.dual_degree >= std::max(k, ls.dual_degree() - k);
    if (!layer.dual_bound_ok) fail("dual-degree bound at layer " +
                                   std::to_string(k));

    if (k <= ps.dual_degree()) {
      for (int l = 0; l <= ls.dual_degree(); ++l) {
        const int gl = ls.parent_index[l];
        const double pk = ps.polys[k](ls.mu[l]);
        const double predicted =
            (rho_c.norm_sq / rho_k.norm_sq) * pk * pk * ls.mult[l];
        layer.mult_identity_max_dev =
            std::max(layer.mult_identity_max_dev,
                     std::abs(ls_k.mult_all[gl] - predicted));
      }
      if (layer.mult_identity_max_dev > ident_tol)
        fail("multiplicity identity at layer " + std::to_string(k));
    }
    rep.layers.push_back(std::move(layer));
  }

  for (int k = 0; k < ecc; ++k) {
    std::set<int> u = layer_ev[k];
    u.insert(layer_ev[k + 1].begin(), layer_ev[k + 1].end());
    if (u != ev_c) {
      rep.coverage_ok = false;
      fail("ev_C != ev_{C_k} union ev_{C_{k+1}} at k = " + std::to_string(k));
    }
  }

  rep.ev_cd_equal = (layer_ev[ecc] == ev_c);
  if (!rep.ev_cd_equal) fail("ev_C != ev_D");
  return rep;
}

MdIdentityReport check_md_identities(const Spectrum& s, const VertexSet& c,
                                     const VertexSet& d,
                                     const LocalSpectrum& ls,
                                     const PredistanceSystem& ps,
                                     const Config& cfg, bool assertive) {
  const WeightedSetVector rho_c = rho_vector(s, c);
  const WeightedSetVector rho_d = rho_vector(s, d);
  const LocalSpectrum ls_d = local_spectrum(s, d, cfg.tol_m);
  const PredistanceSystem ps_d = predistance_polynomials(ls_d, cfg.tol_poly);
  const Polynomial& top = ps.polys.back();
  const Polynomial& top_d = ps_d.polys.back();
  const double mult_tol = 100.0 * cfg.tol_m;

  MdIdentityReport r;
  r.ran = true;
  for (int l = 0; l <= ls.dual_degree(); ++l) {
    const int gl = ls.parent_index[l];
    const double pv = top(ls.mu[l]);
    const double ratio = ls.pi[0] / ls.pi[l];
    r.sign.push_back(pv >= 0.0 ? 1 : -1);
    if (r.sign.back() != (l % 2 == 0 ? 1 : -1)) r.sign_alternates = false;

    const double mc_pred =
        ratio * (rho_d.norm_sq / s.perron_norm_sq) / std::abs(pv);
    const double md_pred =
        ratio * (rho_c.norm_sq / s.perron_norm_sq) * std::abs(pv);
    r.mc_dev.push_back(std::abs(ls.mult[l] - mc_pred));
    r.md_dev.push_back(std::abs(ls_d.mult_all[gl] - md_pred));

    const double pbar = top_d(ls.mu[l]);
    r.pbar_values.push_back(pbar);
    r.reciprocity_dev.push_back(std::abs(std::abs(pbar * pv) - 1.0));

    if (r.mc_dev.back() > mult_tol || r.md_dev.back() > mult_tol ||
        r.reciprocity_dev.back() > cfg.tol_poly)
      r.ok = false;
  }
  if (!r.ok && assertive)
    throw InternalInconsistency(
        "multiplicity/reciprocity identities failed on a CPRC instance");
  return r;
}

std::string to_string(OverallVerdict v) {
  switch (v) {
    case OverallVerdict::Cprc:
      return "CPRC";
    case OverallVerdict::NotCprc:
      return "NOT_CPRC";
    case OverallVerdict::Inconsistent:
      return "INCONSISTENT";
    case OverallVerdict::Skipped:
      return "SKIPPED";
  }
  return "?";
}

Analysis analyze(const Graph& g, const VertexSet& c, const Config& cfg) {
  if (c.empty()) throw GraphError("analysis requires a nonempty vertex set");
  Spectrum s = spectral_decomposition(g, cfg.tol_eig);
  DistancePartition dp = distance_partition(g, c);
  WeightedSetVector rho = rho_vector(s, c);
  LocalSpectrum ls = local_spectrum(s, c, cfg.tol_m);
  if (dp.eccentricity() > ls.dual_degree())
    throw InternalInconsistency(
        "eccentricity exceeds dual degree; tolerances misconfigured");
  PredistanceSystem ps = predistance_polynomials(ls, cfg.tol_poly);
  Polynomial hoffman =
      hoffman_polynomial(ls, s.perron_norm_sq, rho.norm_sq);

  CodeReport rep;
  rep.extremality.eccentricity = dp.eccentricity();
  rep.extremality.dual_degree = ls.dual_degree();
  rep.extremality.extremal = dp.eccentricity() == ls.dual_degree();
  rep.intersection = intersection_functions(g, s, dp);
  rep.combinatorial =
      check_combinatorial(rep.intersection, s.lambda0(), cfg.tol_int);
  rep.theorem1 = check_theorem1(g, s, c, dp, ps, cfg.tol_vec, cfg.tol_m);

  std::vector<const CheckOutcome*> runnable = {&rep.combinatorial,
                                               &rep.theorem1.outcome};
  if (rep.extremality.extremal) {
    const VertexSet& antip = dp.antipodal();
    rep.collinearity =
        check_collinearity(g, s, c, antip, cfg.tol_m, cfg.tol_vec);
    rep.excess = check_spectral_excess(c, antip, s, ls, cfg.tol_ex);
    rep.prop1 =
        check_prop1_inequality(s, c, antip, ls, cfg.tol_m, cfg.tol_ex);
    rep.prop1_ran = true;
    runnable.push_back(&rep.collinearity.outcome);
    runnable.push_back(&rep.excess.outcome);
  } else {
    rep.note =
        "set is not extremal (eccentricity < dual degree); the antipodal "
        "characterizations are only stated for extremal sets and were "
        "skipped";
  }

  const bool all_decisive =
      std::all_of(runnable.begin(), runnable.end(),
                  [](const CheckOutcome* o) { return o->decisive; });
  const bool all_pass = std::all_of(
      runnable.begin(), runnable.end(),
      [](const CheckOutcome* o) { return o->pass; });
  const bool all_fail = std::none_of(
      runnable.begin(), runnable.end(),
      [](const CheckOutcome* o) { return o->pass; });

  if (all_decisive && !all_pass && !all_fail) {
    rep.overall = OverallVerdict::Inconsistent;
    rep.note = "decisive verdicts disagree";
  } else if (!rep.extremality.extremal) {
    rep.overall = OverallVerdict::Skipped;
  } else {
    rep.overall = all_pass ? OverallVerdict::Cprc : OverallVerdict::NotCprc;
  }

  const bool cprc = rep.overall == OverallVerdict::Cprc;
  if (rep.extremality.extremal) {
    rep.subconstituents =
        subconstituent_report(g, s, c, dp, ps, ls, cfg, cprc);
    if (cprc)
      rep.md = check_md_identities(s, c, dp.antipodal(), ls, ps, cfg, true);
  }

  return Analysis{g,  c,  std::move(s),  std::move(dp), std::move(rho),
                  std::move(ls), std::move(ps), std::move(hoffman),
                  std::move(rep)};
}

}  // namespace locspec
