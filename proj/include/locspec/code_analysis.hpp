#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "locspec/config.hpp"
#include "locspec/graph.hpp"
#include "locspec/local_spectrum.hpp"
#include "locspec/predistance.hpp"
#include "locspec/spectrum.hpp"

namespace locspec {

/// Perron-weighted intersection functions c, a, b per vertex, their
/// per-layer means and spreads.  c(i)+a(i)+b(i) = lambda_0 everywhere.
struct IntersectionData {
  std::vector<double> c, a, b;                          // per vertex
  std::vector<double> c_layer, a_layer, b_layer;        // per-layer mean
  std::vector<double> c_spread, a_spread, b_spread;     // per-layer max-min
  double max_spread = 0.0;
  double sum_identity_max_dev = 0.0;  // max_i |c+a+b - lambda_0|
};

IntersectionData intersection_functions(const Graph& g, const Spectrum& s,
                                        const DistancePartition& dp);

/// One characterization's result: the measured margin against its threshold.
/// Decisive means the margin sits at least 10x away from the threshold on
/// either side, so the verdict cannot be a tolerance artifact.
struct CheckOutcome {
  bool ran = false;
  bool pass = false;
  double margin = 0.0;
  double threshold = 0.0;
  bool decisive = false;
};

CheckOutcome check_combinatorial(const IntersectionData& id, double lambda0,
                                 double tol_int);

struct Theorem1Result {
  CheckOutcome outcome;
  std::vector<double> residuals;  // ||rho C_k - p_k(A) rho C|| / ||rho C_k||
};

/// rho C_k = p_k(A) rho C for k = 0..eccentricity (valid for any C with
/// eccentricity <= d_C).
Theorem1Result check_theorem1(const Graph& g, const Spectrum& s,
                              const VertexSet& c, const DistancePartition& dp,
                              const PredistanceSystem& ps, double tol_vec,
                              double tol_m = 1e-10);

struct CollinearityResult {
  CheckOutcome outcome;
  std::vector<double> alpha;      // per local eigenvalue of C
  std::vector<double> residuals;  // collinearity residual / ||rho D||
  double z_norm = 0.0;            // projection mass of rho D outside ev_C
  Polynomial candidate;           // interpolates alpha on the local spectrum
  std::vector<double> candidate_values;
  double antipodal_residual = 0.0;  // ||rho D - p(A) rho C|| / ||rho D||
};

/// Projections of rho C and rho D onto every eigenspace are collinear, with
/// the interpolated candidate polynomial p (p rho C = rho D when positive).
/// Requires C extremal.
CollinearityResult check_collinearity(const Graph& g, const Spectrum& s,
                                      const VertexSet& c, const VertexSet& d,
                                      double tol_m, double tol_vec);

struct ExcessResult {
  CheckOutcome outcome;
  double lhs = 0.0;  // ||rho D||^2 / ||rho C||^2
  double rhs = 0.0;  // closed-form bound from the local spectrum
};

/// Spectral excess bound for extremal sets; equality iff C is a completely
/// pseudo-regular code.
ExcessResult check_spectral_excess(const VertexSet& c, const VertexSet& d,
                                   const Spectrum& s, const LocalSpectrum& ls,
                                   double tol_ex);

struct Prop1Result {
  std::vector<double> slack;  // per local eigenvalue of C
  bool ev_subset = false;     // ev_C contained in ev_D
  std::vector<bool> equality;
  std::vector<double> collinearity_residual;  // clause (i) cross-check
  double min_slack = 0.0;
};

/// m_C(mu_l) m_D(mu_l) >= (pi_0^2/pi_l^2)(||rho C||^2 ||rho D||^2/||nu||^4)
/// for extremal C; equality per eigenvalue iff the projections are
/// collinear.
Prop1Result check_prop1_inequality(const Spectrum& s, const VertexSet& c,
                                   const VertexSet& d, const LocalSpectrum& ls,
                                   double tol_m, double tol_ex);

struct SubconstituentLayer {
  std::vector<int> ev;  // global eigenvalue indices of ev_{C_k}
  int dual_degree = 0;
  bool subset_ok = true;
  bool dual_bound_ok = true;
  double mult_identity_max_dev = 0.0;
};

struct SubconstituentReport {
  bool ran = false;
  bool assertive = false;
  std::vector<SubconstituentLayer> layers;
  bool coverage_ok = true;  // ev_C = ev_{C_k} union ev_{C_{k+1}}, k < ecc
  bool ev_cd_equal = true;
};

/// Per-layer local spectra and every structural consequence of a completely
/// pseudo-regular code.  With assertive set, any failed consequence raises
/// InternalInconsistency; otherwise the report is descriptive.
SubconstituentReport subconstituent_report(const Graph& g, const Spectrum& s,
                                           const VertexSet& c,
                                           const DistancePartition& dp,
                                           const PredistanceSystem& ps,
                                           const LocalSpectrum& ls,
                                           const Config& cfg, bool assertive);

struct MdIdentityReport {
  bool ran = false;
  std::vector<double> mc_dev, md_dev;  // vs the closed forms, with |p_dC|
  std::vector<int> sign;               // sign(p_dC(mu_l))
  bool sign_alternates = true;
  std::vector<double> reciprocity_dev;  // | |pbar(mu_l) p_dC(mu_l)| - 1 |
  std::vector<double> pbar_values;
  bool ok = true;
};

/// Closed-form C/D multiplicity identities and the reciprocity between the
/// top C-local and D-local predistance polynomials, verified in absolute
/// value with the (-1)^l sign pattern recorded separately.
MdIdentityReport check_md_identities(const Spectrum& s, const VertexSet& c,
                                     const VertexSet& d,
                                     const LocalSpectrum& ls,
                                     const PredistanceSystem& ps,
                                     const Config& cfg, bool assertive);

enum class OverallVerdict { Cprc, NotCprc, Inconsistent, Skipped };

std::string to_string(OverallVerdict v);

struct CodeReport {
  ExtremalityReport extremality;
  IntersectionData intersection;
  CheckOutcome combinatorial;
  Theorem1Result theorem1;
  CollinearityResult collinearity;
  ExcessResult excess;
  Prop1Result prop1;
  bool prop1_ran = false;
  SubconstituentReport subconstituents;
  MdIdentityReport md;
  OverallVerdict overall = OverallVerdict::Skipped;
  std::string note;
};

/// Everything the pipeline computed, for reporting.
struct Analysis {
  Graph graph;
  VertexSet set;
  Spectrum spectrum;
  DistancePartition partition;
  WeightedSetVector rho;
  LocalSpectrum local;
  PredistanceSystem polys;
  Polynomial hoffman;
  CodeReport report;
};

/// Full pipeline: decomposition, partition, local spectrum, predistance
/// system, then every characterization that is runnable.  The combinatorial
/// check and Theorem 1 always run; the antipodal characterizations require
/// an extremal set.  Decisive verdicts that disagree flag the report
/// INCONSISTENT.
Analysis analyze(const Graph& g, const VertexSet& c, const Config& cfg = {});

}  // namespace locspec
