#pragma once

#include <vector>

#include "mubw/complex_matrix.hpp"

namespace mubw {

// Absolute entrywise tolerance deciding whether an operator counts as
// Hermitian. Fixed library-wide so certification runs are reproducible.
inline constexpr double kHermitianTol = 1e-12;

// Jacobi sweeps stop once the off-diagonal Frobenius mass drops below this
// factor times the matrix norm.
inline constexpr double kJacobiConvergence = 1e-14;

enum class Subsystem { First, Second };

// Standard Kronecker product.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Transposition of one tensor factor of a square matrix on d1 (x) d2.
ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteDims dims,
                                Subsystem subsystem);

// Block (i,j) of m flattened (row-major) into row (i,j) of the result.
ComplexMatrix realign(const ComplexMatrix& m, BipartiteDims dims);

// Sum of singular values of the realigned matrix; > 1 certifies
// entanglement for unit-trace states.
double realignment_value(const ComplexMatrix& m, BipartiteDims dims);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns, matching order
};

// Cyclic Jacobi diagonalization. Throws if m is not Hermitian within
// kHermitianTol.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);
double min_eigenvalue(const ComplexMatrix& m);

bool is_psd(const ComplexMatrix& m, double tol);

// One-sided Jacobi SVD; descending.
std::vector<double> singular_values(const ComplexMatrix& m);

}  // namespace mubw
