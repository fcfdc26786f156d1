#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "locspec/code_analysis.hpp"
#include "test_support.hpp"

using namespace locspec;
using namespace locspec::testing;

namespace {
Analysis analyze_generated(const std::string& family, std::vector<int> params,
                           std::vector<int> set) {
  Graph g = Graph::generate(family, params);
  return analyze(g, VertexSet::from_indices(std::move(set), g.vertex_count()));
}
}  // namespace

TEST_CASE("intersection functions on cycle(4)") {
  Graph g = Graph::generate("cycle", {4});
  Spectrum s = spectral_decomposition(g);
  VertexSet c = VertexSet::from_indices({0}, 4);
  auto dp = distance_partition(g, c);
  auto id = intersection_functions(g, s, dp);

  const std::vector<double> want_c{0.0, 1.0, 2.0};
  const std::vector<double> want_a{0.0, 0.0, 0.0};
  const std::vector<double> want_b{2.0, 1.0, 0.0};
  for (int k = 0; k < 3; ++k) {
    CHECK(id.c_layer[k] == doctest::Approx(want_c[k]).epsilon(1e-12));
    CHECK(id.a_layer[k] == doctest::Approx(want_a[k]).epsilon(1e-12));
    CHECK(id.b_layer[k] == doctest::Approx(want_b[k]).epsilon(1e-12));
  }
  CHECK(id.max_spread < 1e-12);
  CHECK(id.sum_identity_max_dev < 1e-12);
  CHECK(std::abs(id.c[0]) < 1e-12);  // c vanishes on C_0
  CHECK(std::abs(id.b[2]) < 1e-12);  // b vanishes on the antipodal layer
}

TEST_CASE("intersection functions on the Hamming(7,4) code") {
  Graph g = Graph::generate("hypercube", {7});
  Spectrum s = spectral_decomposition(g);
  auto dp = distance_partition(g, hamming74_codewords());
  auto id = intersection_functions(g, s, dp);
  CHECK(id.c_layer[0] == doctest::Approx(0.0));
  CHECK(id.c_layer[1] == doctest::Approx(1.0));
  CHECK(id.a_layer[0] == doctest::Approx(0.0));
  CHECK(id.a_layer[1] == doctest::Approx(6.0));
  CHECK(id.b_layer[0] == doctest::Approx(7.0));
  CHECK(id.b_layer[1] == doctest::Approx(0.0));
  CHECK(id.max_spread < 1e-12);
}

TEST_CASE("sum identity holds on random graphs") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 14)(rng);
    Graph g = random_connected_graph(rng, n);
    Spectrum s = spectral_decomposition(g);
    VertexSet c = random_nonempty_subset(rng, n);
    auto id = intersection_functions(g, s, distance_partition(g, c));
    CHECK(id.sum_identity_max_dev < 1e-9 * std::max(1.0, s.lambda0()));
  }
}

TEST_CASE("combinatorial check: whole set is trivially regular") {
  Graph g = Graph::generate("petersen", {});
  Spectrum s = spectral_decomposition(g);
  std::vector<int> all(10);
  for (int i = 0; i < 10; ++i) all[i] = i;
  auto dp = distance_partition(g, VertexSet::from_indices(all, 10));
  auto id = intersection_functions(g, s, dp);
  auto v = check_combinatorial(id, s.lambda0(), 1e-9);
  CHECK(v.pass);
  CHECK(id.a_layer[0] == doctest::Approx(3.0));
  CHECK(id.b_layer[0] == 0.0);
  CHECK(id.c_layer[0] == 0.0);
}

TEST_CASE("theorem 1 on cycle(4): rho C_1 = A rho C") {
  Graph g = Graph::generate("cycle", {4});
  Spectrum s = spectral_decomposition(g);
  VertexSet c = VertexSet::from_indices({0}, 4);
  auto dp = distance_partition(g, c);
  auto ls = local_spectrum(s, c);
  auto ps = predistance_polynomials(ls);
  auto r = check_theorem1(g, s, c, dp, ps, 1e-8);
  CHECK(r.outcome.pass);
  REQUIRE(r.residuals.size() == 3);
  CHECK(r.residuals[0] < 1e-12);  // p_0 = 1 is exact
  for (double res : r.residuals) CHECK(res < 1e-9);
}

TEST_CASE("collinearity on cycle(4): alpha alternates, candidate is p_2") {
  Graph g = Graph::generate("cycle", {4});
  Spectrum s = spectral_decomposition(g);
  VertexSet c = VertexSet::from_indices({0}, 4);
  VertexSet d = VertexSet::from_indices({2}, 4);
  auto r = check_collinearity(g, s, c, d, 1e-10, 1e-8);
  CHECK(r.outcome.pass);
  REQUIRE(r.alpha.size() == 3);
  CHECK(r.alpha[0] == doctest::Approx(1.0));
  CHECK(r.alpha[1] == doctest::Approx(-1.0));
  CHECK(r.alpha[2] == doctest::Approx(1.0));
  CHECK(r.candidate.coeffs()[0] == doctest::Approx(-1.0));
  CHECK(r.candidate.coeffs()[2] == doctest::Approx(0.5));
  CHECK(r.antipodal_residual < 1e-9);
}

TEST_CASE("collinearity sign alternation on cycle(6)") {
  Graph g = Graph::generate("cycle", {6});
  Spectrum s = spectral_decomposition(g);
  auto r = check_collinearity(g, s, VertexSet::from_indices({0}, 6),
                              VertexSet::from_indices({3}, 6), 1e-10, 1e-8);
  CHECK(r.outcome.pass);
  for (std::size_t l = 0; l < r.alpha.size(); ++l)
    CHECK((l % 2 == 0 ? r.alpha[l] : -r.alpha[l]) > 0.0);
}

TEST_CASE("spectral excess on cycle(4): equality at 1") {
  Graph g = Graph::generate("cycle", {4});
  Spectrum s = spectral_decomposition(g);
  VertexSet c = VertexSet::from_indices({0}, 4);
  auto ls = local_spectrum(s, c);
  auto r = check_spectral_excess(c, VertexSet::from_indices({2}, 4), s, ls,
                                 1e-8);
  CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.outcome.pass);
}

TEST_CASE("prop 1 slack vanishes on cycle(4)") {
  Graph g = Graph::generate("cycle", {4});
  Spectrum s = spectral_decomposition(g);
  VertexSet c = VertexSet::from_indices({0}, 4);
  auto ls = local_spectrum(s, c);
  auto r = check_prop1_inequality(s, c, VertexSet::from_indices({2}, 4), ls,
                                  1e-10, 1e-8);
  CHECK(r.ev_subset);
  for (double slack : r.slack) CHECK(std::abs(slack) < 1e-10);
  for (double res : r.collinearity_residual) CHECK(res < 1e-9);
}

TEST_CASE("subconstituent report on cycle(4)") {
  Analysis an = analyze_generated("cycle", {4}, {0});
  REQUIRE(an.report.overall == OverallVerdict::Cprc);
  const auto& sc = an.report.subconstituents;
  REQUIRE(sc.ran);
  REQUIRE(sc.layers.size() == 3);
  CHECK(sc.layers[0].ev == std::vector<int>{0, 1, 2});
  CHECK(sc.layers[1].ev == std::vector<int>{0, 2});  // ev_{C_1} = {2, -2}
  CHECK(sc.layers[1].dual_degree == 1);
  CHECK(sc.coverage_ok);
  CHECK(sc.ev_cd_equal);
  for (const auto& layer : sc.layers) {
    CHECK(layer.subset_ok);
    CHECK(layer.dual_bound_ok);
    CHECK(layer.mult_identity_max_dev < 1e-10);
  }
}

TEST_CASE("md identities and reciprocity on cycle(4)") {
  Analysis an = analyze_generated("cycle", {4}, {0});
  const auto& md = an.report.md;
  REQUIRE(md.ran);
  CHECK(md.ok);
  CHECK(md.sign == std::vector<int>{1, -1, 1});
  CHECK(md.sign_alternates);
  for (double dev : md.mc_dev) CHECK(dev < 1e-10);
  for (double dev : md.md_dev) CHECK(dev < 1e-10);
  for (double dev : md.reciprocity_dev) CHECK(dev < 1e-10);
}

TEST_CASE("analyze: cycle(4) vertex is a CPRC on all four tests") {
  Analysis an = analyze_generated("cycle", {4}, {0});
  CHECK(an.report.overall == OverallVerdict::Cprc);
  CHECK(an.report.combinatorial.pass);
  CHECK(an.report.theorem1.outcome.pass);
  CHECK(an.report.collinearity.outcome.pass);
  CHECK(an.report.excess.outcome.pass);
  CHECK(an.report.extremality.extremal);
}

TEST_CASE("analyze: whole set takes the trivial branch") {
  Analysis an = analyze_generated("petersen", {}, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(an.report.overall == OverallVerdict::Cprc);
  CHECK(an.report.extremality.eccentricity == 0);
  CHECK(an.report.extremality.dual_degree == 0);
}

TEST_CASE("analyze: non-extremal sets skip the antipodal characterizations") {
  Analysis an = analyze_generated("hypercube", {3}, {0, 7});
  if (!an.report.extremality.extremal) {
    CHECK(an.report.overall == OverallVerdict::Skipped);
    CHECK(!an.report.collinearity.outcome.ran);
    CHECK(!an.report.excess.outcome.ran);
    CHECK(!an.report.note.empty());
  }
  // Runnable verdicts must agree when decisive.
  if (an.report.combinatorial.decisive && an.report.theorem1.outcome.decisive)
    CHECK(an.report.combinatorial.pass == an.report.theorem1.outcome.pass);
}

TEST_CASE("analyze rejects the empty set") {
  Graph g = Graph::generate("cycle", {4});
  CHECK_THROWS_AS(analyze(g, VertexSet{}), GraphError);
}

TEST_CASE("oracle agreement on a small random corpus") {
  std::mt19937 rng(2024);
  Config cfg;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    Graph g = random_connected_graph(rng, n);
    VertexSet c = random_nonempty_subset(rng, n);
    Analysis an = analyze(g, c, cfg);
    const auto& rep = an.report;

    std::vector<const CheckOutcome*> runnable{&rep.combinatorial,
                                              &rep.theorem1.outcome};
    if (rep.extremality.extremal) {
      runnable.push_back(&rep.collinearity.outcome);
      runnable.push_back(&rep.excess.outcome);
    }
    bool all_decisive = true;
    for (auto* o : runnable) all_decisive = all_decisive && o->decisive;
    if (all_decisive)
      for (auto* o : runnable) CHECK(o->pass == rep.combinatorial.pass);
  }
}
