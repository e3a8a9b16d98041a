#include "mubw/kernels.hpp"

namespace mubw::kernels {

namespace {

void axpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

cplx dot_conj_scalar(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double sum_sq_scalar(const cplx* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return acc;
}

void rot_scalar(cplx* x, cplx* y, double c, cplx s, std::size_t n) {
  const cplx ms = -std::conj(s);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx xi = x[i];
    const cplx yi = y[i];
    x[i] = c * xi + s * yi;
    y[i] = ms * xi + c * yi;
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{axpy_scalar, dot_conj_scalar, sum_sq_scalar,
                                 rot_scalar, "scalar"};
  return table;
}

}  // namespace mubw::kernels
