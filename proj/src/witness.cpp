#include "mubw/witness.hpp"

#include <cmath>
#include <stdexcept>

#include "mubw/linalg.hpp"

namespace mubw {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

cplx omega3(int power) {
  const int p = ((power % 3) + 3) % 3;
  return std::polar(1.0, kTwoPi * p / 3.0);
}

std::size_t vec_index(std::size_t i, std::size_t j, std::size_t d) { return i + d * j; }

void check_torus(const TorusPoint& t) {
  if (t.L() == 1) {
    throw std::invalid_argument(
        "torus family: L = 1 always yields a positive-semidefinite operator; "
        "use at least two bases");
  }
  if (t.L() < 2 || t.L() > 4) {
    throw std::invalid_argument("torus family: L must be 2, 3 or 4");
  }
}

}  // namespace

RotationSpec RotationSpec::from_angle(double a) {
  RotationSpec r;
  r.kind = Kind::Angle;
  r.angle = a;
  return r;
}

RotationSpec RotationSpec::from_perm(std::vector<std::size_t> p) {
  RotationSpec r;
  r.kind = Kind::Permutation;
  r.perm = std::move(p);
  return r;
}

RotationSpec RotationSpec::from_matrix(AxisRotation m) {
  RotationSpec r;
  r.kind = Kind::Matrix;
  r.matrix = std::move(m);
  return r;
}

AxisRotation RotationSpec::resolve(std::size_t d) const {
  switch (kind) {
    case Kind::Angle: {
      if (d == 3) return rotation_nstar_d3(angle);
      if (reduce_angle(angle) == 0.0) return identity_rotation(d);
      throw std::invalid_argument(
          "rotation spec: continuous angle rotations are only defined for d = 3");
    }
    case Kind::Permutation: {
      if (perm.size() != d) {
        throw std::invalid_argument("rotation spec: permutation size != d");
      }
      return permutation_rotation(perm);
    }
    case Kind::Matrix: {
      if (matrix.d != d) throw std::invalid_argument("rotation spec: matrix size != d");
      if (!validate_axis_rotation(matrix)) {
        throw std::invalid_argument(
            "rotation spec: matrix is not orthogonal or does not fix the uniform axis");
      }
      return matrix;
    }
  }
  throw std::logic_error("rotation spec: unknown kind");
}

void WitnessSpec::validate() const {
  if (d < 2) throw std::invalid_argument("witness spec: d must be >= 2");
  if (L == 1) {
    throw std::invalid_argument(
        "witness spec: L = 1 always yields a positive-semidefinite operator; "
        "use at least two bases");
  }
  if (L < 2 || L > d + 1) throw std::invalid_argument("witness spec: need 2 <= L <= d+1");
  if (rotations.size() != L) {
    throw std::invalid_argument("witness spec: need exactly one rotation per basis");
  }
  switch (mub_source) {
    case MubSource::D3Canonical:
      if (d != 3) throw std::invalid_argument("witness spec: canonical quartet needs d = 3");
      break;
    case MubSource::PrimeWeyl:
      if (!is_prime(d)) {
        throw std::invalid_argument("witness spec: Weyl-family bases need prime d");
      }
      break;
    case MubSource::Custom:
      if (custom_mubs.d != d || custom_mubs.L < L || !verify_mub(custom_mubs)) {
        throw std::invalid_argument(
            "witness spec: supplied bases are missing, mismatched or not mutually unbiased");
      }
      break;
  }
}

MubFamily WitnessSpec::resolve_mubs() const {
  validate();
  MubFamily all;
  switch (mub_source) {
    case MubSource::D3Canonical:
      all = mub_d3();
      break;
    case MubSource::PrimeWeyl:
      all = mub_from_families(d);
      break;
    case MubSource::Custom:
      all = custom_mubs;
      break;
  }
  MubFamily out{d, L, {}};
  out.bases.assign(all.bases.begin(), all.bases.begin() + static_cast<long>(L));
  return out;
}

ComplexMatrix MapOperator::apply(const ComplexMatrix& x) const {
  if (!x.is_square() || x.rows() != d) {
    throw std::invalid_argument("map apply: input dimension mismatch");
  }
  ComplexMatrix y(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cplx acc = 0.0;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          acc += transfer(vec_index(i, j, d), vec_index(a, b, d)) * x(a, b);
        }
      y(i, j) = acc;
    }
  return y;
}

MapOperator MapOperator::dual() const { return {d, transfer.dagger()}; }

double MapOperator::trace_preservation_defect() const {
  // Tr Phi(E_ab) must equal delta_ab.
  double worst = 0.0;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      cplx tr = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        tr += transfer(vec_index(i, i, d), vec_index(a, b, d));
      }
      worst = std::max(worst, std::abs(tr - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

MapOperator build_map(const WitnessSpec& spec) {
  const MubFamily mubs = spec.resolve_mubs();
  const std::size_t d = spec.d;
  const double dd = static_cast<double>(d);
  const double front = (dd + static_cast<double>(spec.L) - 1.0) / dd;
  const double inv = 1.0 / (dd - 1.0);

  std::vector<AxisRotation> rots;
  rots.reserve(spec.L);
  for (const auto& r : spec.rotations) rots.push_back(r.resolve(d));

  MapOperator phi{d, ComplexMatrix(d * d, d * d)};
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      ComplexMatrix out(d, d);
      if (a == b) {
        for (std::size_t i = 0; i < d; ++i) out(i, i) = front;
      }
      for (std::size_t alpha = 0; alpha < spec.L; ++alpha) {
        const auto& basis = mubs.bases[alpha];
        for (std::size_t l = 0; l < d; ++l) {
          // Tr(E_ab P_l) = (P_l)_{ba} = u(b,l) conj(u(a,l))
          const cplx weight = basis.u(b, l) * std::conj(basis.u(a, l));
          if (weight == cplx{}) continue;
          for (std::size_t k = 0; k < d; ++k) {
            const double o = rots[alpha](k, l);
            if (o == 0.0) continue;
            const cplx w = weight * o;
            for (std::size_t i = 0; i < d; ++i)
              for (std::size_t j = 0; j < d; ++j) {
                out(i, j) -= w * basis.u(i, k) * std::conj(basis.u(j, k));
              }
          }
        }
      }
      out *= inv;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          phi.transfer(vec_index(i, j, d), vec_index(a, b, d)) = out(i, j);
        }
    }
  }
  return phi;
}

ComplexMatrix build_witness(const WitnessSpec& spec) {
  const MubFamily mubs = spec.resolve_mubs();
  const std::size_t d = spec.d;
  const double front = (static_cast<double>(d + spec.L) - 1.0) / static_cast<double>(d);

  ComplexMatrix w = ComplexMatrix::identity(d * d);
  w *= front;
  for (std::size_t alpha = 0; alpha < spec.L; ++alpha) {
    const AxisRotation o = spec.rotations[alpha].resolve(d);
    const auto& basis = mubs.bases[alpha];
    std::vector<ComplexMatrix> projs;
    projs.reserve(d);
    for (std::size_t k = 0; k < d; ++k) projs.push_back(basis.projector(k));
    for (std::size_t l = 0; l < d; ++l) {
      ComplexMatrix q(d, d);  // sum_k O_kl P_k
      for (std::size_t k = 0; k < d; ++k) {
        if (o(k, l) == 0.0) continue;
        ComplexMatrix scaled = projs[k];
        scaled *= o(k, l);
        q += scaled;
      }
      w -= kron(projs[l].conjugate(), q);
    }
  }
  return w;
}

ComplexMatrix choi_witness(const MapOperator& phi) {
  const std::size_t d = phi.d;
  ComplexMatrix w(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix e(d, d);
      e(i, j) = 1.0;
      const ComplexMatrix out = phi.apply(e);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          w(i * d + a, j * d + b) = out(a, b);
        }
    }
  w *= static_cast<double>(d - 1);
  return w;
}

ClosedFormCoeffs closed_form_coeffs(const TorusPoint& t) {
  check_torus(t);
  const double phi1 = t.angles[0];
  ClosedFormCoeffs cf{};
  const double s3 = std::sqrt(3.0) / 2.0;
  cf.a = (2.0 / 3.0) * (1.0 - std::cos(phi1));
  cf.b = (2.0 / 3.0) * (s3 * std::sin(phi1) + 0.5 * std::cos(phi1) + 1.0);
  cf.c = (2.0 / 3.0) * (-s3 * std::sin(phi1) + 0.5 * std::cos(phi1) + 1.0);

  const cplx w = omega3(1), wc = omega3(-1);
  if (t.L() == 4) {
    const cplx e2 = std::polar(1.0, t.angles[1]);
    const cplx e3 = std::polar(1.0, -t.angles[2]);
    const cplx e4 = std::polar(1.0, t.angles[3]);
    cf.p = -(e2 + e3 + e4) / 3.0;
    cf.q = -(e2 + wc * e3 + w * e4) / 3.0;
    cf.r = -(e2 + w * e3 + wc * e4) / 3.0;
  } else if (t.L() == 3) {
    const cplx e2 = std::polar(1.0, t.angles[1]);
    const cplx e3 = std::polar(1.0, -t.angles[2]);
    cf.p = -(e2 + e3) / 3.0;
    cf.q = -(e2 + wc * e3) / 3.0;
    cf.r = -(e2 + w * e3) / 3.0;
  } else {
    const cplx z = -std::polar(1.0, t.angles[1]) / 3.0;
    cf.p = cf.q = cf.r = z;
  }
  return cf;
}

ComplexMatrix witness_d3_closed_form(const TorusPoint& t) {
  const ClosedFormCoeffs cf = closed_form_coeffs(t);
  ComplexMatrix w(9, 9);
  const double diag[9] = {cf.a, cf.b, cf.c, cf.c, cf.a, cf.b, cf.b, cf.c, cf.a};
  for (std::size_t i = 0; i < 9; ++i) w(i, i) = diag[i];

  const cplx p = cf.p, q = cf.q, r = cf.r;
  const cplx pc = std::conj(p), qc = std::conj(q), rc = std::conj(r);
  w(0, 4) = pc; w(0, 8) = p;
  w(1, 5) = qc; w(1, 6) = q;
  w(2, 3) = rc; w(2, 7) = r;
  w(3, 2) = r;  w(3, 7) = rc;
  w(4, 0) = p;  w(4, 8) = pc;
  w(5, 1) = q;  w(5, 6) = qc;
  w(6, 1) = qc; w(6, 5) = q;
  w(7, 2) = rc; w(7, 3) = r;
  w(8, 0) = pc; w(8, 4) = p;
  return w;
}

WeylCoeffs coeffs_torus_to_weyl(const TorusPoint& t) {
  if (t.L() != 4) {
    throw std::invalid_argument("coeffs_torus_to_weyl: defined for the full L = 4 family");
  }
  const double p1 = t.angles[0], p2 = t.angles[1], p3 = t.angles[2], p4 = t.angles[3];
  WeylCoeffs wc;
  wc.d = 3;
  wc.scale = 1.0 / 3.0;
  wc.c = ComplexMatrix(3, 3);
  wc.c(0, 0) = 2.0;
  wc.c(1, 0) = -std::polar(1.0, -p1);
  wc.c(2, 0) = -std::polar(1.0, p1);
  wc.c(0, 1) = -std::polar(1.0, -p2);
  wc.c(0, 2) = -std::polar(1.0, p2);
  wc.c(1, 1) = -std::polar(1.0, -p4);
  wc.c(2, 2) = -std::polar(1.0, p4);
  wc.c(2, 1) = -std::polar(1.0, p3);
  wc.c(1, 2) = -std::polar(1.0, -p3);
  return wc;
}

ComplexMatrix witness_from_weyl(const WeylCoeffs& coeffs) {
  const std::size_t d = coeffs.d;
  if (d < 2 || coeffs.c.rows() != d || coeffs.c.cols() != d) {
    throw std::invalid_argument("witness_from_weyl: coefficient table must be d x d");
  }
  if (coeffs.scale <= 0.0) {
    throw std::invalid_argument("witness_from_weyl: scale must be positive");
  }
  if (std::abs(coeffs.c(0, 0) - cplx(static_cast<double>(d - 1))) > 1e-12) {
    throw std::invalid_argument("witness_from_weyl: c_00 must equal d - 1");
  }
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      const cplx mirror = coeffs.c((d - k) % d, (d - l) % d);
      if (std::abs(std::conj(coeffs.c(k, l)) - mirror) > 1e-12) {
        throw std::invalid_argument(
            "witness_from_weyl: coefficients violate conj(c_kl) = c_{-k,-l}");
      }
    }

  ComplexMatrix w(d * d, d * d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      const cplx ckl = coeffs.c(k, l);
      if (ckl == cplx{}) continue;
      ComplexMatrix term =
          kron(weyl_operator(d, {k, l}), weyl_operator(d, {(d - k) % d, l}));
      term *= ckl * coeffs.scale;
      w += term;
    }
  return w;
}

MapOperator ando_map(std::size_t d, std::size_t k) {
  if (d < 2) throw std::invalid_argument("ando_map: d must be >= 2");
  if (k > d - 1) throw std::invalid_argument("ando_map: need 0 <= k <= d-1");
  const double inv = 1.0 / static_cast<double>(d - 1);
  MapOperator phi{d, ComplexMatrix(d * d, d * d)};
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      ComplexMatrix out(d, d);
      if (a == b) {
        out(a, a) += static_cast<double>(d - k);
        for (std::size_t i = 1; i <= k; ++i) out((a + i) % d, (a + i) % d) += 1.0;
      }
      out(a, b) -= 1.0;
      out *= inv;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          phi.transfer(vec_index(i, j, d), vec_index(a, b, d)) = out(i, j);
        }
    }
  return phi;
}

MapOperator shift_pinching_map(std::size_t d) {
  if (d < 2) throw std::invalid_argument("shift_pinching_map: d must be >= 2");
  const double inv = 1.0 / static_cast<double>(d - 1);
  MapOperator phi{d, ComplexMatrix(d * d, d * d)};
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      ComplexMatrix out(d, d);
      if (a == b) {
        out(a, a) += 2.0;
        for (std::size_t i = 2; i < d; ++i) out((a + i) % d, (a + i) % d) += 1.0;
      }
      out(a, b) -= 1.0;
      out *= inv;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          phi.transfer(vec_index(i, j, d), vec_index(a, b, d)) = out(i, j);
        }
    }
  return phi;
}

MapOperator depolarizing_map(std::size_t d) {
  MapOperator phi{d, ComplexMatrix(d * d, d * d)};
  const double inv = 1.0 / static_cast<double>(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t i = 0; i < d; ++i) {
      phi.transfer(vec_index(i, i, d), vec_index(a, a, d)) = inv;
    }
  return phi;
}

ComplexMatrix permutation_witness(const std::vector<std::vector<std::size_t>>& perms) {
  if (perms.empty()) throw std::invalid_argument("permutation_witness: no permutations");
  const std::size_t d = perms[0].size();
  if (perms.size() != d + 1) {
    throw std::invalid_argument("permutation_witness: need d+1 permutations");
  }
  WitnessSpec spec;
  spec.d = d;
  spec.L = d + 1;
  spec.mub_source = (d == 3) ? MubSource::D3Canonical : MubSource::PrimeWeyl;
  for (const auto& p : perms) spec.rotations.push_back(RotationSpec::from_perm(p));
  return build_witness(spec);
}

WitnessSpec torus_spec(const TorusPoint& t) {
  check_torus(t);
  WitnessSpec spec;
  spec.d = 3;
  spec.L = t.L();
  spec.mub_source = MubSource::D3Canonical;
  for (const double a : t.angles) spec.rotations.push_back(RotationSpec::from_angle(a));
  return spec;
}

}  // namespace mubw
