// AVX2+FMA variants of the complex array kernels. Two complex numbers per
// 256-bit lane pair; tails fall back to scalar arithmetic. Built only when
// the toolchain accepts -mavx2 -mfma; runtime CPU checks live in the
// dispatcher, so this TU may be compiled into binaries that run on older
// machines as long as these symbols are not called there.

#include "mubw/kernels.hpp"

#ifdef MUBW_HAVE_AVX2

#include <immintrin.h>

namespace mubw::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// a * v for interleaved complex lanes, a = ar + i*ai broadcast.
inline __m256d cmul(__m256d ar, __m256d ai, __m256d v) {
  const __m256d vswap = _mm256_permute_pd(v, 0x5);  // (im,re) per complex
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, vswap));
}

void axpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul(ar, ai, xv)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

cplx dot_conj_avx2(const cplx* x, const cplx* y, std::size_t n) {
  // conj(x)*y: re = sum over both components of x.*y,
  //            im = sum of (x_re*y_im - x_im*y_re).
  const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    const __m256d yswap = _mm256_permute_pd(yv, 0x5);
    acc_im = _mm256_fmadd_pd(_mm256_mul_pd(xv, yswap), sign, acc_im);
  }
  double re = hsum(acc_re), im = hsum(acc_im);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double sum_sq_avx2(const cplx* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const double* xd = reinterpret_cast<const double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

void rot_avx2(cplx* x, cplx* y, double c, cplx s, std::size_t n) {
  const cplx ms = -std::conj(s);
  const __m256d cb = _mm256_set1_pd(c);
  const __m256d sr = _mm256_set1_pd(s.real());
  const __m256d si = _mm256_set1_pd(s.imag());
  const __m256d mr = _mm256_set1_pd(ms.real());
  const __m256d mi = _mm256_set1_pd(ms.imag());
  double* xd = reinterpret_cast<double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    const __m256d nx = _mm256_fmadd_pd(cb, xv, cmul(sr, si, yv));
    const __m256d ny = _mm256_fmadd_pd(cb, yv, cmul(mr, mi, xv));
    _mm256_storeu_pd(xd + 2 * i, nx);
    _mm256_storeu_pd(yd + 2 * i, ny);
  }
  for (; i < n; ++i) {
    const cplx xi = x[i];
    const cplx yi = y[i];
    x[i] = c * xi + s * yi;
    y[i] = ms * xi + c * yi;
  }
}

}  // namespace

const KernelTable* avx2_kernels() {
  if (!cpu_supports_avx2()) return nullptr;
  static const KernelTable table{axpy_avx2, dot_conj_avx2, sum_sq_avx2,
                                 rot_avx2, "avx2"};
  return &table;
}

}  // namespace mubw::kernels

#else

namespace mubw::kernels {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace mubw::kernels

#endif
