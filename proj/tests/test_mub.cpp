#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mubw/linalg.hpp"
#include "mubw/mub.hpp"
#include "mubw/rng.hpp"

using namespace mubw;

namespace {

const cplx w = std::polar(1.0, 2.0 * M_PI / 3.0);
const cplx wc = std::conj(w);

ComplexMatrix m3(std::initializer_list<cplx> vals) { return {3, 3, std::vector<cplx>(vals)}; }

double unbiasedness_defect(const MubFamily& f) {
  double worst = 0.0;
  for (std::size_t a = 0; a < f.L; ++a)
    for (std::size_t b = a + 1; b < f.L; ++b)
      for (std::size_t k = 0; k < f.d; ++k)
        for (std::size_t l = 0; l < f.d; ++l) {
          cplx dot = 0.0;
          for (std::size_t i = 0; i < f.d; ++i) {
            dot += std::conj(f.bases[a].u(i, k)) * f.bases[b].u(i, l);
          }
          worst = std::max(worst, std::abs(std::norm(dot) - 1.0 / static_cast<double>(f.d)));
        }
  return worst;
}

}  // namespace

TEST_CASE("weyl operators reproduce the d=3 matrices") {
  CHECK(max_abs_diff(weyl_operator(3, {0, 0}), ComplexMatrix::identity(3)) == 0.0);
  CHECK(max_abs_diff(weyl_operator(3, {0, 1}), m3({0, 1, 0, 0, 0, 1, 1, 0, 0})) < 1e-15);
  CHECK(max_abs_diff(weyl_operator(3, {0, 2}), m3({0, 0, 1, 1, 0, 0, 0, 1, 0})) < 1e-15);
  CHECK(max_abs_diff(weyl_operator(3, {1, 0}), m3({1, 0, 0, 0, w, 0, 0, 0, w * w})) < 1e-15);
  CHECK(max_abs_diff(weyl_operator(3, {1, 1}), m3({0, 1, 0, 0, 0, w, w * w, 0, 0})) < 1e-15);
  CHECK(max_abs_diff(weyl_operator(3, {1, 2}), m3({0, 0, 1, w, 0, 0, 0, w * w, 0})) < 1e-15);
  CHECK(max_abs_diff(weyl_operator(3, {2, 0}), m3({1, 0, 0, 0, w * w, 0, 0, 0, w})) < 1e-15);
  CHECK(max_abs_diff(weyl_operator(3, {2, 1}), m3({0, 1, 0, 0, 0, w * w, w, 0, 0})) < 1e-15);
  CHECK(max_abs_diff(weyl_operator(3, {2, 2}), m3({0, 0, 1, w * w, 0, 0, 0, w, 0})) < 1e-15);
}

TEST_CASE("weyl operators are unitary") {
  for (const std::size_t d : {2u, 3u, 5u}) {
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l) {
        const ComplexMatrix u = weyl_operator(d, {k, l});
        CHECK(max_abs_diff(u * u.dagger(), ComplexMatrix::identity(d)) < 1e-13);
      }
  }
}

TEST_CASE("weyl product and dagger relations") {
  CHECK(weyl_relation_check(2));
  CHECK(weyl_relation_check(3));
  CHECK(weyl_relation_check(5));
}

TEST_CASE("commuting families partition the nonzero indices") {
  const auto fams3 = commuting_families(3);
  const std::vector<std::vector<WeylIndex>> expected3{
      {{1, 0}, {2, 0}}, {{1, 1}, {2, 2}}, {{1, 2}, {2, 1}}, {{0, 1}, {0, 2}}};
  CHECK(fams3 == expected3);

  const auto fams2 = commuting_families(2);
  const std::vector<std::vector<WeylIndex>> expected2{{{1, 0}}, {{1, 1}}, {{0, 1}}};
  CHECK(fams2 == expected2);

  const auto fams5 = commuting_families(5);
  REQUIRE(fams5.size() == 6);
  std::size_t total = 0;
  for (const auto& fam : fams5) {
    CHECK(fam.size() == 4);
    total += fam.size();
    for (const auto& a : fam)
      for (const auto& b : fam) {
        const ComplexMatrix ua = weyl_operator(5, a), ub = weyl_operator(5, b);
        CHECK(max_abs_diff(ua * ub, ub * ua) < 1e-14);  // commutator oracle
      }
  }
  CHECK(total == 24);

  CHECK_THROWS_AS(commuting_families(4), std::invalid_argument);
  CHECK_THROWS_AS(commuting_families(6), std::invalid_argument);
}

TEST_CASE("weyl-family eigenbases are mutually unbiased") {
  for (const std::size_t d : {2u, 3u, 5u, 7u}) {
    const MubFamily f = mub_from_families(d);
    CHECK(f.L == d + 1);
    CHECK(verify_mub(f));
    CHECK(unbiasedness_defect(f) < 1e-12);
  }
}

TEST_CASE("the diagonal family yields the computational basis") {
  const MubFamily f = mub_from_families(3);
  CHECK(max_abs_diff(f.bases[0].u, ComplexMatrix::identity(3)) < 1e-12);
}

TEST_CASE("qubit family eigenbases are the pauli bases") {
  const MubFamily f = mub_from_families(2);
  // family order: (1,0) diagonal, (1,1), (0,1) flip
  CHECK(max_abs_diff(f.bases[0].u, ComplexMatrix::identity(2)) < 1e-12);
  CHECK(unbiasedness_defect(f) < 1e-13);
}

TEST_CASE("canonical d=3 quartet matches the published vectors") {
  const MubFamily f = mub_d3();
  REQUIRE(f.L == 4);
  CHECK(verify_mub(f));

  const double s = 1.0 / std::sqrt(3.0);
  // second basis, first vector: (1,1,1)/sqrt(3)
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(f.bases[1].u(i, 0) - s) < 1e-15);
  // third basis, first vector: (1,1,conj(w))/sqrt(3)
  CHECK(std::abs(f.bases[2].u(0, 0) - s) < 1e-15);
  CHECK(std::abs(f.bases[2].u(1, 0) - s) < 1e-15);
  CHECK(std::abs(f.bases[2].u(2, 0) - s * wc) < 1e-15);
  // fourth basis, third vector: (1,w,1)/sqrt(3)
  CHECK(std::abs(f.bases[3].u(0, 2) - s) < 1e-15);
  CHECK(std::abs(f.bases[3].u(1, 2) - s * w) < 1e-15);
  CHECK(std::abs(f.bases[3].u(2, 2) - s) < 1e-15);
  // fourth basis is the conjugate of the third
  CHECK(max_abs_diff(f.bases[3].u, f.bases[2].u.conjugate()) == 0.0);
}

TEST_CASE("verify_mub rejects a repeated basis") {
  MubFamily f = mub_d3();
  f.bases[1] = f.bases[2];
  CHECK_FALSE(verify_mub(f));
}

TEST_CASE("projectors of every basis sum to the identity") {
  for (const MubFamily& f : {mub_d3(), mub_from_families(5)}) {
    for (const auto& basis : f.bases) {
      ComplexMatrix sum(f.d, f.d);
      for (std::size_t k = 0; k < f.d; ++k) sum += basis.projector(k);
      CHECK(max_abs_diff(sum, ComplexMatrix::identity(f.d)) < 1e-13);
    }
  }
}

TEST_CASE("projector overlap sums: full family saturates 2") {
  Rng rng(33);
  for (const std::size_t d : {2u, 3u, 5u}) {
    const MubFamily f = d == 3 ? mub_d3() : mub_from_families(d);
    for (int rep = 0; rep < 50; ++rep) {
      const ComplexMatrix p = rng.rank1_projector(d);
      double acc = 0.0;
      for (const auto& basis : f.bases)
        for (std::size_t k = 0; k < f.d; ++k) {
          const double overlap = (p * basis.projector(k)).trace().real();
          acc += overlap * overlap;
        }
      CHECK(acc == doctest::Approx(2.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("projector overlap sums: partial families obey the bound") {
  Rng rng(35);
  const MubFamily full = mub_d3();
  for (const std::size_t L : {2u, 3u}) {
    MubFamily f{3, L, {full.bases.begin(), full.bases.begin() + static_cast<long>(L)}};
    double worst = -1.0;
    for (int rep = 0; rep < 1000; ++rep) {
      const ComplexMatrix p = rng.rank1_projector(3);
      double acc = 0.0;
      for (const auto& basis : f.bases)
        for (std::size_t k = 0; k < 3; ++k) {
          const double overlap = (p * basis.projector(k)).trace().real();
          acc += overlap * overlap;
        }
      worst = std::max(worst, acc);
    }
    CHECK(worst <= 1.0 + static_cast<double>(L - 1) / 3.0 + 1e-10);
  }
}

TEST_CASE("primality helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(6));
  CHECK_FALSE(is_prime(9));
}
