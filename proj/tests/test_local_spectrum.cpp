#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "locspec/local_spectrum.hpp"
#include "test_support.hpp"

using namespace locspec;
using namespace locspec::testing;

namespace {
VertexSet whole(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return VertexSet::from_indices(std::move(all), n);
}
}  // namespace

TEST_CASE("rho vector basics") {
  Graph g = Graph::generate("cycle", {4});
  Spectrum s = spectral_decomposition(g);
  auto w = rho_vector(s, VertexSet::from_indices({0}, 4));
  CHECK((w.rho - Eigen::VectorXd::Unit(4, 0)).norm() < 1e-12);
  CHECK(w.norm_sq == doctest::Approx(1.0));

  auto wv = rho_vector(s, whole(4));
  CHECK((wv.rho - s.perron).norm() < 1e-12);

  Graph p2 = Graph::generate("path", {2});
  Spectrum s2 = spectral_decomposition(p2);
  auto w2 = rho_vector(s2, VertexSet::from_indices({0}, 2));
  CHECK(w2.rho[0] == doctest::Approx(1.0));
  CHECK(w2.rho[1] == 0.0);
  CHECK(w2.unit[0] == doctest::Approx(1.0));

  CHECK_THROWS_AS(rho_vector(s, VertexSet{}), GraphError);
}

TEST_CASE("cycle(4) local spectrum at a vertex") {
  Graph g = Graph::generate("cycle", {4});
  Spectrum s = spectral_decomposition(g);
  LocalSpectrum ls = local_spectrum(s, VertexSet::from_indices({0}, 4));
  REQUIRE(ls.dual_degree() == 2);
  CHECK(ls.mu[0] == doctest::Approx(2.0));
  CHECK(ls.mu[1] == doctest::Approx(0.0));
  CHECK(ls.mu[2] == doctest::Approx(-2.0));
  CHECK(ls.mult[0] == doctest::Approx(0.25));
  CHECK(ls.mult[1] == doctest::Approx(0.5));
  CHECK(ls.mult[2] == doctest::Approx(0.25));
  CHECK(ls.pi[0] == doctest::Approx(8.0));
  CHECK(ls.pi[1] == doctest::Approx(4.0));
  CHECK(ls.pi[2] == doctest::Approx(8.0));
  CHECK(ls.parent_index == std::vector<int>{0, 1, 2});
}

TEST_CASE("whole set collapses to the Perron eigenvalue") {
  Graph g = Graph::generate("petersen", {});
  Spectrum s = spectral_decomposition(g);
  LocalSpectrum ls = local_spectrum(s, whole(10));
  REQUIRE(ls.dual_degree() == 0);
  CHECK(ls.mu[0] == doctest::Approx(3.0));
  CHECK(ls.mult[0] == doctest::Approx(1.0));
  CHECK(ls.pi[0] == doctest::Approx(1.0));
}

TEST_CASE("petersen vertex: local multiplicities scale the global ones") {
  Graph g = Graph::generate("petersen", {});
  Spectrum s = spectral_decomposition(g);
  LocalSpectrum ls = local_spectrum(s, VertexSet::from_indices({0}, 10));
  REQUIRE(ls.dual_degree() == 2);
  CHECK(ls.mu[0] == doctest::Approx(3.0));
  CHECK(ls.mu[1] == doctest::Approx(1.0));
  CHECK(ls.mu[2] == doctest::Approx(-2.0));
  CHECK(ls.mult[0] == doctest::Approx(0.1));
  CHECK(ls.mult[1] == doctest::Approx(0.5));
  CHECK(ls.mult[2] == doctest::Approx(0.4));
}

TEST_CASE("local multiplicity invariants across a random corpus") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 14)(rng);
    Graph g = random_connected_graph(rng, n);
    Spectrum s = spectral_decomposition(g);
    VertexSet c = random_nonempty_subset(rng, n);
    LocalSpectrum ls = local_spectrum(s, c);
    auto w = rho_vector(s, c);

    CHECK(std::abs(ls.mult_all.sum() - 1.0) < 1e-10 * (s.count() + 1));
    CHECK(ls.mult_all[0] ==
          doctest::Approx(w.norm_sq / s.perron_norm_sq).epsilon(1e-10));
    CHECK(ls.parent_index[0] == 0);  // mu_0 = lambda_0 always present

    auto ext = is_extremal(g, s, c);
    CHECK(ext.eccentricity <= ext.dual_degree);
  }
}

TEST_CASE("is_extremal examples") {
  Graph g = Graph::generate("cycle", {4});
  Spectrum s = spectral_decomposition(g);
  auto r = is_extremal(g, s, VertexSet::from_indices({0}, 4));
  CHECK(r.extremal);
  CHECK(r.eccentricity == 2);
  CHECK(r.dual_degree == 2);

  auto rv = is_extremal(g, s, whole(4));
  CHECK(rv.extremal);
  CHECK(rv.eccentricity == 0);

  Graph q3 = Graph::generate("hypercube", {3});
  Spectrum s3 = spectral_decomposition(q3);
  auto r3 = is_extremal(q3, s3, VertexSet::from_indices({0, 7}, 8));
  CHECK(r3.eccentricity == 1);
  CHECK(r3.eccentricity <= r3.dual_degree);
}

TEST_CASE("local idempotent polynomials") {
  Graph g = Graph::generate("cycle", {4});
  Spectrum s = spectral_decomposition(g);
  VertexSet c = VertexSet::from_indices({0}, 4);
  LocalSpectrum ls = local_spectrum(s, c);

  Polynomial z0 = local_idempotent_polynomial(ls, 0);
  // (x^2 + 2x) / 8
  REQUIRE(z0.degree() == 2);
  CHECK(z0.coeffs()[0] == doctest::Approx(0.0));
  CHECK(z0.coeffs()[1] == doctest::Approx(0.25));
  CHECK(z0.coeffs()[2] == doctest::Approx(0.125));
  CHECK(z0(2.0) == doctest::Approx(1.0));

  Polynomial z1 = local_idempotent_polynomial(ls, 1);
  CHECK(z1(2.0) == doctest::Approx(0.0));
  CHECK(z1(0.0) == doctest::Approx(1.0));
  CHECK(z1(-2.0) == doctest::Approx(0.0));

  // Z_l(A) e_C = E_l e_C.
  auto w = rho_vector(s, c);
  for (int l = 0; l <= ls.dual_degree(); ++l) {
    Polynomial z = local_idempotent_polynomial(ls, l);
    CHECK((apply_polynomial(g, z, w.unit) -
           project(s, ls.parent_index[l], w.unit))
              .norm() < 1e-9);
  }
  CHECK_THROWS_AS(local_idempotent_polynomial(ls, 3), GraphError);

  // Degree-zero case: the empty product.
  LocalSpectrum lsv = local_spectrum(s, whole(4));
  Polynomial z = local_idempotent_polynomial(lsv, 0);
  CHECK(z.degree() == 0);
  CHECK(z.coeffs()[0] == doctest::Approx(1.0));
}
