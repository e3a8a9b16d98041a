#pragma once

#include <cstddef>
#include <vector>

#include "mubw/complex_matrix.hpp"
#include "mubw/mub.hpp"
#include "mubw/rotation.hpp"

namespace mubw {

// One axis-fixing rotation per basis slot: a torus angle (d=3 circulant),
// a permutation, or an explicit orthogonal matrix.
struct RotationSpec {
  enum class Kind { Angle, Permutation, Matrix };
  Kind kind = Kind::Angle;
  double angle = 0.0;
  std::vector<std::size_t> perm;
  AxisRotation matrix;

  static RotationSpec from_angle(double a);
  static RotationSpec from_perm(std::vector<std::size_t> p);
  static RotationSpec from_matrix(AxisRotation m);

  AxisRotation resolve(std::size_t d) const;
};

enum class MubSource { D3Canonical, PrimeWeyl, Custom };

struct WitnessSpec {
  std::size_t d = 3;
  std::size_t L = 4;
  std::vector<RotationSpec> rotations;
  MubSource mub_source = MubSource::D3Canonical;
  MubFamily custom_mubs;  // consulted only when mub_source == Custom

  void validate() const;
  MubFamily resolve_mubs() const;  // first L bases of the source family
};

// Linear map on d x d matrices, stored as its d^2 x d^2 transfer matrix in
// the column-stacking convention vec(X)_{i + d*j} = X_{ij}.
struct MapOperator {
  std::size_t d = 0;
  ComplexMatrix transfer;

  ComplexMatrix apply(const ComplexMatrix& x) const;
  MapOperator dual() const;  // adjoint under the trace pairing
  double trace_preservation_defect() const;
};

// Point on the L-torus parameterizing the d=3 family; angles[i] rotates
// basis i+1 of the canonical quartet.
struct TorusPoint {
  std::vector<double> angles;
  std::size_t L() const { return angles.size(); }
};

// Coefficients of the Weyl-product expansion
// W = scale * sum_{kl} c_{kl} U_{kl} (x) U_{-k,l}.
struct WeylCoeffs {
  std::size_t d = 3;
  double scale = 1.0;
  ComplexMatrix c;  // d x d; c(0,0) = d-1; conj(c_kl) = c_{-k,-l}
};

// Trace-preserving positive map: depolarizing term minus rotated projector
// correlations, one axis-fixing rotation per mutually unbiased basis.
MapOperator build_map(const WitnessSpec& spec);

// Hermitian block-positive d^2 x d^2 operator
//   (d+L-1)/d I (x) I - sum_a sum_kl O^(a)_{kl} conj(P^(a)_l) (x) P^(a)_k.
ComplexMatrix build_witness(const WitnessSpec& spec);

// (d-1) sum_{ij} |i><j| (x) Phi(|i><j|); equals build_witness for maps
// built from the same spec.
ComplexMatrix choi_witness(const MapOperator& phi);

// Diagonal/off-diagonal parameters of the d=3 closed form.
struct ClosedFormCoeffs {
  double a, b, c;
  cplx p, q, r;
};
ClosedFormCoeffs closed_form_coeffs(const TorusPoint& t);

// The 9x9 closed form of the d=3 torus family for L = 2, 3, 4 bases.
ComplexMatrix witness_d3_closed_form(const TorusPoint& t);

// d=3, L=4 correspondence between torus angles and Weyl-product
// coefficients; all off-origin |c_kl| = 1 and the round trip through
// witness_from_weyl reproduces witness_d3_closed_form.
WeylCoeffs coeffs_torus_to_weyl(const TorusPoint& t);

ComplexMatrix witness_from_weyl(const WeylCoeffs& coeffs);

// tau_{d,k}[X] = ((d-k) eps[X] + sum_{i=1..k} eps[S^i X S^dag^i] - X)/(d-1)
// with eps the diagonal pinching and S the cyclic shift.
MapOperator ando_map(std::size_t d, std::size_t k);

// (2 eps[X] + sum_{i=2}^{d-1} eps[S^i X S^dag^i] - X)/(d-1); equals the
// construction with the cyclic shift on the first basis and identities
// elsewhere, and the trace-pairing dual of tau_{d,d-2}.
MapOperator shift_pinching_map(std::size_t d);

// X -> I Tr(X)/d.
MapOperator depolarizing_map(std::size_t d);

// Witness with one permutation per basis over the maximal MUB family
// (canonical quartet for d=3, Weyl families for other primes).
ComplexMatrix permutation_witness(const std::vector<std::vector<std::size_t>>& perms);

// d=3 spec over the canonical quartet with angle rotations from t.
WitnessSpec torus_spec(const TorusPoint& t);

}  // namespace mubw
