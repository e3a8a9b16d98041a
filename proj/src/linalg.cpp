#include "mubw/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mubw/kernels.hpp"

namespace mubw {

namespace {

void require_bipartite(const ComplexMatrix& m, BipartiteDims dims) {
  if (!m.is_square() || m.rows() != dims.total()) {
    throw std::invalid_argument("bipartite operation: matrix dimension != d1*d2");
  }
  if (dims.d1 == 0 || dims.d2 == 0) {
    throw std::invalid_argument("bipartite operation: zero factor dimension");
  }
}

// 2x2 Hermitian block [[a, g], [conj(g), b]] (a, b real): returns the plane
// rotation (c, s) with G = [[c, s], [-conj(s), c]] such that G^dag M G is
// diagonal. Uses the smaller-angle root for stability.
struct PlaneRotation {
  double c;
  cplx s;
};

PlaneRotation diagonalizing_rotation(double a, double b, cplx g) {
  const double ag = std::abs(g);
  const double tau = (b - a) / (2.0 * ag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const cplx phase = g / ag;
  return {c, (t * c) * phase};
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p) {
    for (std::size_t q = 0; q < a.cols(); ++q) {
      if (p == q) continue;
      acc += std::norm(a(p, q));
    }
  }
  return std::sqrt(acc);
}

// Right-multiplication of column pair (p,q) by [[c, s], [-conj(s), c]].
void rotate_columns(ComplexMatrix& a, std::size_t p, std::size_t q, double c, cplx s) {
  const cplx sc = std::conj(s);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const cplx tp = a(i, p);
    const cplx tq = a(i, q);
    a(i, p) = c * tp - sc * tq;
    a(i, q) = s * tp + c * tq;
  }
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        kernels::axpy(aij, b.row(k), out.row(i * b.rows() + k) + j * b.cols(), b.cols());
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteDims dims,
                                Subsystem subsystem) {
  require_bipartite(m, dims);
  const std::size_t d1 = dims.d1, d2 = dims.d2;
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t a = 0; a < d2; ++a)
      for (std::size_t j = 0; j < d1; ++j)
        for (std::size_t b = 0; b < d2; ++b) {
          const cplx v = m(i * d2 + a, j * d2 + b);
          if (subsystem == Subsystem::First) {
            out(j * d2 + a, i * d2 + b) = v;
          } else {
            out(i * d2 + b, j * d2 + a) = v;
          }
        }
  return out;
}

ComplexMatrix realign(const ComplexMatrix& m, BipartiteDims dims) {
  require_bipartite(m, dims);
  const std::size_t d1 = dims.d1, d2 = dims.d2;
  ComplexMatrix out(d1 * d1, d2 * d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t a = 0; a < d2; ++a)
        for (std::size_t b = 0; b < d2; ++b) {
          out(i * d1 + j, a * d2 + b) = m(i * d2 + a, j * d2 + b);
        }
  return out;
}

double realignment_value(const ComplexMatrix& m, BipartiteDims dims) {
  const auto sv = singular_values(realign(m, dims));
  return std::accumulate(sv.begin(), sv.end(), 0.0);
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("eigensystem: matrix not square");
  if (!m.is_hermitian(kHermitianTol)) {
    throw std::invalid_argument("eigensystem: matrix not Hermitian within tolerance");
  }
  const std::size_t n = m.rows();

  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double stop = kJacobiConvergence * a.frobenius_norm();
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx g = a(p, q);
        if (std::abs(g) <= 1e-300) continue;
        const auto [c, s] = diagonalizing_rotation(a(p, p).real(), a(q, q).real(), g);
        // A <- G^dag A G, V <- V G
        kernels::rot(a.row(p), a.row(q), c, -s, n);
        rotate_columns(a, p, q, c, s);
        rotate_columns(v, p, q, c, s);
      }
    }
  }
  if (off_diagonal_norm(a) > std::max(stop, 1e-13 * (1.0 + a.frobenius_norm()))) {
    throw std::runtime_error("eigensystem: Jacobi sweeps did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eigensystem(m).values;
}

double min_eigenvalue(const ComplexMatrix& m) { return hermitian_eigenvalues(m).front(); }

bool is_psd(const ComplexMatrix& m, double tol) { return min_eigenvalue(m) >= -tol; }

std::vector<double> singular_values(const ComplexMatrix& m) {
  // One-sided Jacobi on the columns of m, held contiguously as rows of the
  // transposed copy. Column p of m is row p of t, unconjugated, so the
  // Gram entry <m_p, m_q> equals dot_conj(t_p, t_q).
  const std::size_t ncols = m.cols();
  const std::size_t len = m.rows();
  ComplexMatrix t = m.transpose();

  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < ncols; ++p) {
      for (std::size_t q = p + 1; q < ncols; ++q) {
        const double a = kernels::sum_sq(t.row(p), len);
        const double b = kernels::sum_sq(t.row(q), len);
        const cplx g = kernels::dot_conj(t.row(p), t.row(q), len);
        if (std::abs(g) <= kJacobiConvergence * std::sqrt(a * b) || std::abs(g) <= 1e-300) {
          continue;
        }
        const auto [c, s] = diagonalizing_rotation(a, b, g);
        kernels::rot(t.row(p), t.row(q), c, -std::conj(s), len);
        rotated = true;
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(ncols);
  for (std::size_t p = 0; p < ncols; ++p) sv[p] = std::sqrt(kernels::sum_sq(t.row(p), len));
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace mubw
