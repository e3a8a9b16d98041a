#pragma once

#include <cstddef>
#include <vector>

#include "mubw/complex_matrix.hpp"

namespace mubw {

inline constexpr double kMubTol = 1e-12;

// Index pair (k, l) of a Weyl operator, reduced mod d.
struct WeylIndex {
  std::size_t k = 0;
  std::size_t l = 0;
  friend bool operator==(const WeylIndex&, const WeylIndex&) = default;
};

// Orthonormal basis of C^d held as the columns of a unitary.
struct Basis {
  ComplexMatrix u;

  std::size_t dim() const { return u.rows(); }
  std::vector<cplx> vector(std::size_t k) const;
  ComplexMatrix projector(std::size_t k) const;  // |psi_k><psi_k|
};

// Ordered list of L pairwise mutually unbiased bases in dimension d.
struct MubFamily {
  std::size_t d = 0;
  std::size_t L = 0;
  std::vector<Basis> bases;
};

bool is_prime(std::size_t n);

// U_{kl} = sum_m w^{km} |m><m+l mod d|, w = exp(2 pi i / d).
ComplexMatrix weyl_operator(std::size_t d, WeylIndex idx);

// Checks the product rule U_{kl} U_{rs} = w^{rl} U_{k+r,l+s} and the
// adjoint rule U_{kl}^dag = w^{kl} U_{-k,-l} over all index pairs.
bool weyl_relation_check(std::size_t d, double tol = 1e-13);

// Partition of the d^2-1 nonzero index pairs into d+1 classes of mutually
// commuting operators ([U_{kl}, U_{ij}] = 0 iff k*j = i*l mod d).
// Class order: direction (1,0), (1,1), ..., (1,d-1), (0,1); members in
// multiplier order t = 1..d-1. Requires d prime.
std::vector<std::vector<WeylIndex>> commuting_families(std::size_t d);

// Common eigenbasis of each commuting class; the d+1 resulting bases are
// mutually unbiased for prime d. Deterministic convention: diagonalize the
// lexicographically first operator of the class, order eigenvectors by the
// principal argument of the corresponding eigenvalue ascending in [0, 2pi),
// and scale each so its first nonvanishing component is real positive.
MubFamily mub_from_families(std::size_t d);

// The canonical d=3 quartet: computational basis plus the three standard
// complex Hadamard-type bases, exact phases and order.
MubFamily mub_d3();

// Orthonormality of every basis and pairwise unbiasedness
// |<psi_k|phi_l>|^2 = 1/d, all within tol.
bool verify_mub(const MubFamily& f, double tol = kMubTol);

}  // namespace mubw
