#pragma once

#include <complex>
#include <cstddef>

namespace mubw::kernels {

using cplx = std::complex<double>;

// Inner loops on interleaved (re,im) double arrays. The scalar table is the
// reference semantics; any SIMD table must agree with it to rounding noise
// (equivalence-tested in test_kernels).
//
//   axpy:     y[i] += a * x[i]
//   dot_conj: sum_i conj(x[i]) * y[i]
//   sum_sq:   sum_i |x[i]|^2
//   rot:      (x[i], y[i]) <- (c*x[i] + s*y[i], -conj(s)*x[i] + c*y[i]),
//             c real; unitary plane rotation used by the Jacobi sweeps.
struct KernelTable {
  void (*axpy)(cplx a, const cplx* x, cplx* y, std::size_t n);
  cplx (*dot_conj)(const cplx* x, const cplx* y, std::size_t n);
  double (*sum_sq)(const cplx* x, std::size_t n);
  void (*rot)(cplx* x, cplx* y, double c, cplx s, std::size_t n);
  const char* name;
};

const KernelTable& scalar_kernels();

// Null when the binary was built without AVX2 support or the CPU lacks
// AVX2/FMA at runtime.
const KernelTable* avx2_kernels();

// Best table for this machine, chosen once. MUBW_KERNELS=scalar|avx2
// overrides (requesting avx2 on an unsupported host falls back to scalar).
const KernelTable& active_kernels();

bool cpu_supports_avx2();

inline void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  active_kernels().axpy(a, x, y, n);
}
inline cplx dot_conj(const cplx* x, const cplx* y, std::size_t n) {
  return active_kernels().dot_conj(x, y, n);
}
inline double sum_sq(const cplx* x, std::size_t n) {
  return active_kernels().sum_sq(x, n);
}
inline void rot(cplx* x, cplx* y, double c, cplx s, std::size_t n) {
  active_kernels().rot(x, y, c, s, n);
}

}  // namespace mubw::kernels
