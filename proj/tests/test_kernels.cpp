#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "mubw/kernels.hpp"
#include "mubw/rng.hpp"

using namespace mubw;
using kernels::KernelTable;

namespace {

std::vector<cplx> random_array(Rng& rng, std::size_t n) {
  std::vector<cplx> v(n);
  for (auto& e : v) e = rng.gaussian_cplx();
  return v;
}

const std::size_t kSizes[] = {0, 1, 2, 3, 5, 8, 9, 16, 33, 81, 200};

}  // namespace

TEST_CASE("scalar kernels match naive complex arithmetic") {
  const KernelTable& k = kernels::scalar_kernels();
  Rng rng(42);
  for (const std::size_t n : kSizes) {
    auto x = random_array(rng, n);
    auto y = random_array(rng, n);
    const cplx a = rng.gaussian_cplx();

    cplx dot{};
    double sq = 0.0;
    std::vector<cplx> yref = y;
    for (std::size_t i = 0; i < n; ++i) {
      dot += std::conj(x[i]) * y[i];
      sq += std::norm(x[i]);
      yref[i] += a * x[i];
    }
    CHECK(std::abs(k.dot_conj(x.data(), y.data(), n) - dot) < 1e-12 * (1.0 + std::abs(dot)));
    CHECK(k.sum_sq(x.data(), n) == doctest::Approx(sq).epsilon(1e-13));

    auto ymut = y;
    k.axpy(a, x.data(), ymut.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ymut[i] - yref[i]) < 1e-13);
  }
}

TEST_CASE("rot applies the unitary plane rotation") {
  const KernelTable& k = kernels::scalar_kernels();
  Rng rng(7);
  auto x = random_array(rng, 17);
  auto y = random_array(rng, 17);
  const double before = k.sum_sq(x.data(), 17) + k.sum_sq(y.data(), 17);

  // |c|^2 + |s|^2 = 1
  const double c = 0.6;
  const cplx s = std::polar(0.8, 1.234);
  auto xr = x, yr = y;
  k.rot(xr.data(), yr.data(), c, s, 17);

  for (std::size_t i = 0; i < 17; ++i) {
    CHECK(std::abs(xr[i] - (c * x[i] + s * y[i])) < 1e-14);
    CHECK(std::abs(yr[i] - (-std::conj(s) * x[i] + c * y[i])) < 1e-14);
  }
  const double after = k.sum_sq(xr.data(), 17) + k.sum_sq(yr.data(), 17);
  CHECK(after == doctest::Approx(before).epsilon(1e-13));
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const KernelTable* simd = kernels::avx2_kernels();
  if (!simd) return;  // host without AVX2: dispatch already covered by scalar
  const KernelTable& ref = kernels::scalar_kernels();
  Rng rng(2024);

  for (const std::size_t n : kSizes) {
    auto x = random_array(rng, n);
    auto y = random_array(rng, n);
    const cplx a = rng.gaussian_cplx();
    const double scale = 1.0 + std::sqrt(static_cast<double>(n));

    const cplx d0 = ref.dot_conj(x.data(), y.data(), n);
    const cplx d1 = simd->dot_conj(x.data(), y.data(), n);
    CHECK(std::abs(d0 - d1) < 1e-13 * scale);

    CHECK(std::abs(ref.sum_sq(x.data(), n) - simd->sum_sq(x.data(), n)) < 1e-13 * scale * scale);

    auto y0 = y, y1 = y;
    ref.axpy(a, x.data(), y0.data(), n);
    simd->axpy(a, x.data(), y1.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y0[i] - y1[i]) < 1e-13);

    auto xs0 = x, ys0 = y, xs1 = x, ys1 = y;
    const double c = 1.0 / std::sqrt(2.0);
    const cplx s = std::polar(1.0 / std::sqrt(2.0), 0.777);
    ref.rot(xs0.data(), ys0.data(), c, s, n);
    simd->rot(xs1.data(), ys1.data(), c, s, n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(xs0[i] - xs1[i]) < 1e-13);
      CHECK(std::abs(ys0[i] - ys1[i]) < 1e-13);
    }
  }
}

TEST_CASE("dispatch picks a valid table") {
  const KernelTable& active = kernels::active_kernels();
  const std::string name = active.name;
  CHECK((name == "scalar" || name == "avx2"));
  if (!kernels::cpu_supports_avx2()) CHECK(name == "scalar");
}
