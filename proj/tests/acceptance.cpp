// Acceptance suite. Each criterion prints one pass/fail line with its
// measured margin; the process exit code is the number of failures.
// Run with a criterion number (1..12) to execute a single criterion, or with
// no arguments to run all of them.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "mubw/blockpos.hpp"
#include "mubw/detect.hpp"
#include "mubw/linalg.hpp"
#include "mubw/rng.hpp"
#include "mubw/witness.hpp"

using namespace mubw;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s  criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

TorusPoint random_point(Rng& rng, std::size_t L) {
  TorusPoint t;
  for (std::size_t i = 0; i < L; ++i) t.angles.push_back(rng.uniform() * 2.0 * M_PI);
  return t;
}

const TorusPoint kFlagship{{M_PI, M_PI, 0.0, 0.0}};

// 1. Tr(rho W) = -2/15 at the flagship point, under a second.
void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  const ComplexMatrix w = build_witness(torus_spec(kFlagship));
  const double value = witness_expectation(canonical_rho(), w);
  const double secs = elapsed_seconds(start);
  const double err = std::abs(value + 2.0 / 15.0);
  report(1, err < 1e-12 && secs < 1.0, "flagship expectation -2/15",
         fmt("error %.3e, %.3f s", err, secs));
}

// 2. The flagship witness matches the published matrix entrywise.
void criterion2() {
  // clang-format off
  const double pattern[81] = {
       4, 0, 0, 0,-1, 0, 0, 0,-1,
       0, 1, 0, 0, 0, 2, 2, 0, 0,
       0, 0, 1, 2, 0, 0, 0, 2, 0,
       0, 0, 2, 1, 0, 0, 0, 2, 0,
      -1, 0, 0, 0, 4, 0, 0, 0,-1,
       0, 2, 0, 0, 0, 1, 2, 0, 0,
       0, 2, 0, 0, 0, 2, 1, 0, 0,
       0, 0, 2, 2, 0, 0, 0, 1, 0,
      -1, 0, 0, 0,-1, 0, 0, 0, 4};
  // clang-format on
  ComplexMatrix expect(9, 9);
  for (std::size_t i = 0; i < 81; ++i) expect.data()[i] = pattern[i] / 3.0;
  const double err = max_abs_diff(build_witness(torus_spec(kFlagship)), expect);
  report(2, err < 1e-12, "flagship witness equals the reference matrix",
         fmt("max entry deviation %.3e", err));
}

// 3. The shipped state is PPT and its realignment value equals 1 +- 1e-9.
void criterion3() {
  const ComplexMatrix rho = canonical_rho();
  const double min_pt =
      min_eigenvalue(partial_transpose(rho, {3, 3}, Subsystem::Second));
  const double r = realignment_value(rho, {3, 3});
  const bool ppt_ok = min_pt >= -1e-12;
  const bool realign_ok = std::abs(r - 1.0) < 1e-9;
  report(3, ppt_ok && realign_ok, "shipped state: PPT and realignment = 1",
         fmt("min eig of partial transpose %.3e; realignment %.10f", min_pt, r));
}

// 4. None of the four single-angle families detects the shipped state.
void criterion4() {
  const ComplexMatrix rho = canonical_rho();
  double worst = std::numeric_limits<double>::infinity();
  for (const auto fam :
       {ScanFamily::Angle1, ScanFamily::Angle2, ScanFamily::Angle3, ScanFamily::Angle4}) {
    worst = std::min(worst, detection_scan(rho, fam, 720).min_value);
  }
  report(4, worst >= -1e-10, "single-angle families never detect the shipped state",
         fmt("minimum over 4 x 720 grid points %.6f", worst));
}

// 5. Identity rotations with the full family give the reduction map.
void criterion5() {
  double worst = 0.0;
  Rng rng(51);
  for (const std::size_t d : {2u, 3u, 5u}) {
    WitnessSpec spec;
    spec.d = d;
    spec.L = d + 1;
    spec.mub_source = d == 3 ? MubSource::D3Canonical : MubSource::PrimeWeyl;
    for (std::size_t i = 0; i < spec.L; ++i) spec.rotations.push_back(RotationSpec::from_angle(0.0));
    const MapOperator phi = build_map(spec);
    for (int rep = 0; rep < 100; ++rep) {
      const ComplexMatrix x = rng.matrix(d, d);
      ComplexMatrix expect = ComplexMatrix::identity(d);
      expect *= x.trace();
      expect -= x;
      expect *= 1.0 / (static_cast<double>(d) - 1.0);
      worst = std::max(worst, max_abs_diff(phi.apply(x), expect));
    }
  }
  report(5, worst < 1e-12, "identity rotations recover the reduction map (d = 2, 3, 5)",
         fmt("max deviation %.3e", worst));
}

// 6. Closed form equals the general constructor over dense grids.
void criterion6() {
  double worst = 0.0;
  for (const std::size_t L : {2u, 3u, 4u}) {
    const std::size_t steps = 5;
    std::vector<std::size_t> idx(L, 0);
    while (true) {
      TorusPoint t;
      for (std::size_t i = 0; i < L; ++i) {
        t.angles.push_back(2.0 * M_PI * static_cast<double>(idx[i]) / static_cast<double>(steps));
      }
      worst =
          std::max(worst, max_abs_diff(witness_d3_closed_form(t), build_witness(torus_spec(t))));
      std::size_t pos = 0;
      while (pos < L && ++idx[pos] == steps) idx[pos++] = 0;
      if (pos == L) break;
    }
  }
  report(6, worst < 1e-12, "closed form = constructor on 5^L grids (L = 2, 3, 4)",
         fmt("max entry deviation %.3e", worst));
}

// 7. Published example parameter values and the PSD point.
void criterion7() {
  double worst = 0.0;
  for (const double phi1 : {0.0, 1.1, M_PI, 4.4}) {
    const auto cf = closed_form_coeffs({{phi1, 0.0, 0.0, 0.0}});
    worst = std::max({worst, std::abs(cf.p - cplx(-1.0)), std::abs(cf.q), std::abs(cf.r)});
  }
  const auto cf3 = closed_form_coeffs({{0.6, 0.0, 0.0}});
  const cplx w3 = std::polar(1.0, 2.0 * M_PI / 3.0);
  worst = std::max({worst, std::abs(cf3.p - cplx(-2.0 / 3.0)), std::abs(cf3.q - w3 / 3.0),
                    std::abs(cf3.r - std::conj(w3) / 3.0)});
  const double min_eig = min_eigenvalue(witness_d3_closed_form({{M_PI, 0.0, 0.0}}));
  const bool ok = worst < 1e-12 && min_eig >= -1e-12;
  report(7, ok, "example parameter values and the PSD three-basis point",
         fmt("max parameter deviation %.3e, min eigenvalue %.3e", worst, min_eig));
}

// 8. Ball criterion with sphere saturation for the full family.
void criterion8() {
  Rng rng(88);
  double worst_eig = std::numeric_limits<double>::infinity();
  double worst_excess = -std::numeric_limits<double>::infinity();
  double worst_sphere = 0.0;
  for (const std::size_t L : {2u, 3u, 4u}) {
    for (int s = 0; s < 20; ++s) {
      const MapOperator phi = build_map(torus_spec(random_point(rng, L)));
      Rng proj_rng = Rng::stream(880, static_cast<std::uint64_t>(L * 100 + s));
      for (int rep = 0; rep < 1000; ++rep) {
        const ComplexMatrix out = phi.apply(proj_rng.rank1_projector(3));
        double purity = 0.0;
        for (std::size_t i = 0; i < out.size(); ++i) purity += std::norm(out.data()[i]);
        worst_eig = std::min(worst_eig, min_eigenvalue(out));
        worst_excess = std::max(worst_excess, purity - 0.5);
        if (L == 4) worst_sphere = std::max(worst_sphere, std::abs(purity - 0.5));
      }
    }
  }
  const bool ok = worst_eig >= -1e-10 && worst_excess <= 1e-10 && worst_sphere < 1e-10;
  report(8, ok, "projector images: PSD, inside the ball, on the sphere for L = 4",
         fmt("min eig %.3e, sphere deviation %.3e", worst_eig, worst_sphere));
}

// 9. MUB and Weyl algebra suites.
void criterion9() {
  double unbias = 0.0;
  for (const std::size_t d : {2u, 3u, 5u, 7u}) {
    const MubFamily f = mub_from_families(d);
    for (std::size_t a = 0; a < f.L; ++a)
      for (std::size_t b = a + 1; b < f.L; ++b)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l) {
            cplx dot = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
              dot += std::conj(f.bases[a].u(i, k)) * f.bases[b].u(i, l);
            }
            unbias = std::max(unbias, std::abs(std::norm(dot) - 1.0 / static_cast<double>(d)));
          }
  }
  bool weyl_ok = true;
  for (const std::size_t d : {2u, 3u, 5u}) weyl_ok = weyl_ok && weyl_relation_check(d, 1e-13);
  const std::vector<std::vector<WeylIndex>> expected{
      {{1, 0}, {2, 0}}, {{1, 1}, {2, 2}}, {{1, 2}, {2, 1}}, {{0, 1}, {0, 2}}};
  const bool families_ok = commuting_families(3) == expected;
  report(9, unbias < 1e-12 && weyl_ok && families_ok,
         "unbiasedness (d = 2,3,5,7), Weyl relations (d = 2,3,5), d=3 class partition",
         fmt("unbiasedness defect %.3e", unbias));
}

// 10. Torus angles and Weyl-product coefficients give the same witness.
void criterion10() {
  Rng rng(100);
  double worst = 0.0;
  double modulus = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const TorusPoint t = random_point(rng, 4);
    const WeylCoeffs coeffs = coeffs_torus_to_weyl(t);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t l = 0; l < 3; ++l) {
        if (k == 0 && l == 0) continue;
        modulus = std::max(modulus, std::abs(std::abs(coeffs.c(k, l)) - 1.0));
      }
    worst = std::max(worst, max_abs_diff(witness_from_weyl(coeffs), witness_d3_closed_form(t)));
  }
  report(10, worst < 1e-12 && modulus < 1e-12,
         "Weyl-coefficient form reproduces the closed form on 50 random points",
         fmt("max entry deviation %.3e, modulus defect %.3e", worst, modulus));
}

// 11. See-saw lower bounds on 100 random torus witnesses.
void criterion11() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(111);
  SeeSawConfig cfg;
  cfg.restarts = 50;
  cfg.max_iters = 200;
  cfg.conv_tol = 1e-12;
  double worst = std::numeric_limits<double>::infinity();
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t L = 2 + rep % 3;
    const ComplexMatrix w = build_witness(torus_spec(random_point(rng, L)));
    cfg.seed = static_cast<std::uint64_t>(rep);
    worst = std::min(worst, min_product_expectation(w, {3, 3}, cfg).value);
  }
  const double secs = elapsed_seconds(start);
  report(11, worst >= -1e-8 && secs < 120.0,
         "see-saw minimum >= -1e-8 on 100 random torus witnesses",
         fmt("worst value %.3e, %.1f s", worst, secs));
}

// 12. The shifted-pinching map is the trace-pairing dual of tau_{3,1}.
void criterion12() {
  const MapOperator ep = shift_pinching_map(3);
  const MapOperator dual = ando_map(3, 1).dual();
  Rng rng(120);
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const ComplexMatrix x = rng.matrix(3, 3);
    worst = std::max(worst, max_abs_diff(ep.apply(x), dual.apply(x)));
  }
  report(12, worst < 1e-12, "shifted-pinching map equals the dual of tau_{3,1}",
         fmt("max deviation over 100 inputs %.3e", worst));
}

}  // namespace

int main(int argc, char** argv) {
  void (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                          criterion5, criterion6, criterion7, criterion8,
                          criterion9, criterion10, criterion11, criterion12};
  if (argc > 1) {
    const int n = std::atoi(argv[1]);
    if (n < 1 || n > 12) {
      std::fprintf(stderr, "usage: acceptance [1..12]\n");
      return 64;
    }
    criteria[n - 1]();
  } else {
    for (auto* c : criteria) c();
  }
  return g_failures;
}
