#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "mubw/blockpos.hpp"
#include "mubw/linalg.hpp"
#include "mubw/rng.hpp"

using namespace mubw;

namespace {

const BipartiteDims k33{3, 3};

SeeSawConfig quick_cfg(std::uint64_t seed, int restarts = 20) {
  SeeSawConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

double product_expectation(const ComplexMatrix& w, const std::vector<cplx>& x,
                           const std::vector<cplx>& y) {
  const std::size_t d1 = x.size(), d2 = y.size();
  cplx acc = 0.0;
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t a = 0; a < d2; ++a)
      for (std::size_t j = 0; j < d1; ++j)
        for (std::size_t b = 0; b < d2; ++b) {
          acc += std::conj(x[i] * y[a]) * w(i * d2 + a, j * d2 + b) * x[j] * y[b];
        }
  return acc.real();
}

}  // namespace

TEST_CASE("constant objective: the identity") {
  const auto res = min_product_expectation(ComplexMatrix::identity(9), k33, quick_cfg(1, 5));
  CHECK(res.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reduction witness: product minimum is zero") {
  const ComplexMatrix w = build_witness(torus_spec({{0.0, 0.0, 0.0, 0.0}}));
  const auto res = min_product_expectation(w, k33, quick_cfg(2, 30));
  CHECK(std::abs(res.value) < 1e-9);

  // brute-force product sampling can only do worse
  Rng rng(3);
  double sampled = std::numeric_limits<double>::infinity();
  for (int rep = 0; rep < 1000000; ++rep) {
    sampled = std::min(sampled,
                       product_expectation(w, rng.unit_vector(3), rng.unit_vector(3)));
  }
  CHECK(sampled >= res.value - 1e-9);
  CHECK(sampled >= -1e-9);

  // the reported minimizer reproduces the reported value
  CHECK(product_expectation(w, res.x, res.y) == doctest::Approx(res.value).epsilon(1e-10));

  // zeros of the reduction witness are the pairs y = conj(x) up to phase
  cplx overlap = 0.0;
  for (std::size_t i = 0; i < 3; ++i) overlap += res.x[i] * res.y[i];
  CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("flagship witness is block positive but not PSD") {
  const ComplexMatrix w = build_witness(torus_spec({{M_PI, M_PI, 0.0, 0.0}}));
  const auto res = min_product_expectation(w, k33, quick_cfg(4, 50));
  CHECK(res.value >= -1e-8);
  CHECK(min_eigenvalue(w) < -0.3);

  const WitnessClass cls = classify(w, k33, quick_cfg(4, 50));
  CHECK(cls.label == WitnessLabel::ProperWitness);
}

TEST_CASE("classification of the PSD family point") {
  const TorusPoint psd_point{{M_PI, 0.0, 0.0}};
  const WitnessClass cls = classify(build_witness(torus_spec(psd_point)), k33, quick_cfg(5));
  CHECK(cls.label == WitnessLabel::PositiveSemidefinite);
  CHECK(cls.min_eig >= -1e-10);
}

TEST_CASE("negative operators are flagged") {
  ComplexMatrix w = ComplexMatrix::identity(9);
  w *= -1.0;
  const WitnessClass cls = classify(w, k33, quick_cfg(6, 5));
  CHECK(cls.label == WitnessLabel::NotBlockPositive);
  CHECK(cls.min_product_value == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("seeded runs are bit-identical") {
  const ComplexMatrix w = build_witness(torus_spec({{2.1, 0.8, 5.5, 1.3}}));
  const auto a = min_product_expectation(w, k33, quick_cfg(123, 10));
  const auto b = min_product_expectation(w, k33, quick_cfg(123, 10));
  CHECK(a.value == b.value);
  CHECK(a.best_restart == b.best_restart);
  REQUIRE(a.x.size() == b.x.size());
  for (std::size_t i = 0; i < a.x.size(); ++i) CHECK(a.x[i] == b.x[i]);
  for (std::size_t i = 0; i < a.y.size(); ++i) CHECK(a.y[i] == b.y[i]);

  const auto c = min_product_expectation(w, k33, quick_cfg(124, 10));
  CHECK(std::abs(a.value - c.value) < 1e-6);  // different seed, same landscape
}

TEST_CASE("see-saw value is an upper bound attained by its minimizer") {
  Rng rng(7);
  for (int rep = 0; rep < 5; ++rep) {
    ComplexMatrix w = rng.hermitian(9);
    const auto res = min_product_expectation(w, k33, quick_cfg(rep, 15));
    CHECK(product_expectation(w, res.x, res.y) == doctest::Approx(res.value).epsilon(1e-9));
    // unit norm factors
    double nx = 0.0, ny = 0.0;
    for (const auto& e : res.x) nx += std::norm(e);
    for (const auto& e : res.y) ny += std::norm(e);
    CHECK(nx == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ny == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("classification is never PSD when a clearly negative product value exists") {
  Rng rng(8);
  for (int rep = 0; rep < 20; ++rep) {
    ComplexMatrix w = rng.hermitian(9);
    const WitnessClass cls = classify(w, k33, quick_cfg(rep, 10));
    if (cls.min_product_value < -1e-8) {
      CHECK(cls.label != WitnessLabel::PositiveSemidefinite);
    }
    if (cls.label == WitnessLabel::ProperWitness) {
      CHECK(cls.min_eig < -1e-10);
      CHECK(cls.min_product_value >= -1e-8);
    }
  }
}

TEST_CASE("weyl-coefficient witnesses with small moduli stay block positive") {
  Rng rng(9);
  for (int rep = 0; rep < 100; ++rep) {
    WeylCoeffs coeffs;
    coeffs.d = 3;
    coeffs.scale = 0.2 + rng.uniform();
    coeffs.c = ComplexMatrix(3, 3);
    coeffs.c(0, 0) = 2.0;
    // conjugate index pairs (k,l) <-> (-k,-l) with |c| <= 1
    const std::pair<WeylIndex, WeylIndex> pairs[] = {
        {{1, 0}, {2, 0}}, {{0, 1}, {0, 2}}, {{1, 1}, {2, 2}}, {{1, 2}, {2, 1}}};
    for (const auto& [fwd, rev] : pairs) {
      const cplx v = std::polar(rng.uniform(), rng.uniform() * 2.0 * M_PI);
      coeffs.c(fwd.k, fwd.l) = v;
      coeffs.c(rev.k, rev.l) = std::conj(v);
    }
    const ComplexMatrix w = witness_from_weyl(coeffs);
    const WitnessClass cls = classify(w, k33, quick_cfg(rep, 8));
    CHECK(cls.label != WitnessLabel::NotBlockPositive);
    CHECK(cls.min_product_value >= -1e-8);
  }
}

TEST_CASE("map positivity probe on the reduction map") {
  const MapOperator phi = build_map(torus_spec({{0.0, 0.0, 0.0, 0.0}}));
  const MapProbeReport rep = map_positivity_probe(phi, 1000, 17);
  CHECK(rep.all_psd);
  CHECK(rep.all_in_ball);
  CHECK(rep.max_trace_dev < 1e-12);
  // full family: outputs pinned to the sphere, not just the ball
  CHECK(rep.max_purity == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(rep.min_purity == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("map positivity probe on a two-basis map stays strictly inside the ball") {
  const MapOperator phi = build_map(torus_spec({{1.2, 2.7}}));
  const MapProbeReport rep = map_positivity_probe(phi, 1000, 18);
  CHECK(rep.all_psd);
  CHECK(rep.all_in_ball);
  CHECK(rep.max_purity < 0.5 - 1e-4);  // generic projectors stay off the boundary
}

TEST_CASE("map positivity probe on the depolarizing channel") {
  const MapProbeReport rep = map_positivity_probe(depolarizing_map(3), 200, 19);
  CHECK(rep.all_psd);
  CHECK(rep.max_purity == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(rep.min_purity == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("invalid see-saw inputs are rejected") {
  ComplexMatrix skew(9, 9);
  skew(0, 3) = 1.0;
  CHECK_THROWS_AS(min_product_expectation(skew, k33, quick_cfg(1)), std::invalid_argument);
  CHECK_THROWS_AS(min_product_expectation(ComplexMatrix::identity(8), k33, quick_cfg(1)),
                  std::invalid_argument);
  SeeSawConfig bad = quick_cfg(1);
  bad.conv_tol = 0.0;
  CHECK_THROWS_AS(min_product_expectation(ComplexMatrix::identity(9), k33, bad),
                  std::invalid_argument);
}
