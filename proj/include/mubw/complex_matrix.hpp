#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mubw {

using cplx = std::complex<double>;

// Dense row-major complex matrix; the carrier for states, witnesses,
// unitaries and projectors throughout the library.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  cplx* data() { return entries_.data(); }
  const cplx* data() const { return entries_.data(); }
  cplx* row(std::size_t i) { return entries_.data() + i * cols_; }
  const cplx* row(std::size_t i) const { return entries_.data() + i * cols_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx a);

  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix dagger() const;

  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  bool is_finite() const;
  bool is_hermitian(double tol) const;  // max |A_ij - conj(A_ji)| <= tol

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx a, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest entrywise |a - b|; matrices must have equal shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Tensor factorization d1 (x) d2 of a square matrix dimension.
struct BipartiteDims {
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  std::size_t total() const { return d1 * d2; }
};

}  // namespace mubw
