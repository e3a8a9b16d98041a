#include "mubw/rng.hpp"

#include <cmath>

#include "mubw/kernels.hpp"

namespace mubw {

namespace {
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(mix(seed + 0x9E3779B97F4A7C15ull * (index + 1)));
}

std::uint64_t Rng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  return mix(state_);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // 1 - u in (0, 1] keeps the log finite.
  const double r = std::sqrt(-2.0 * std::log(1.0 - uniform()));
  const double t = 2.0 * M_PI * uniform();
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

cplx Rng::gaussian_cplx() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

std::vector<cplx> Rng::unit_vector(std::size_t dim) {
  std::vector<cplx> v(dim);
  double norm_sq = 0.0;
  do {
    for (auto& e : v) e = gaussian_cplx();
    norm_sq = kernels::sum_sq(v.data(), dim);
  } while (norm_sq < 1e-30);
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& e : v) e *= inv;
  return v;
}

ComplexMatrix Rng::matrix(std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = gaussian_cplx();
  return m;
}

ComplexMatrix Rng::hermitian(std::size_t n) {
  ComplexMatrix g = matrix(n, n);
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
  return h;
}

ComplexMatrix Rng::rank1_projector(std::size_t n) {
  const auto v = unit_vector(n);
  ComplexMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = v[i] * std::conj(v[j]);
  return p;
}

ComplexMatrix Rng::density(std::size_t n) {
  const ComplexMatrix g = matrix(n, n);
  ComplexMatrix rho = g * g.dagger();
  rho *= 1.0 / rho.trace();
  return rho;
}

}  // namespace mubw
