#include "mubw/detect.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mubw/kernels.hpp"
#include "mubw/linalg.hpp"

namespace mubw {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

void require_state(const ComplexMatrix& rho) {
  if (!rho.is_square()) throw std::invalid_argument("state check: matrix not square");
  if (!rho.is_hermitian(kHermitianTol)) {
    throw std::invalid_argument("state check: matrix not Hermitian");
  }
  if (std::abs(rho.trace() - cplx(1.0)) > 1e-10) {
    throw std::invalid_argument("state check: trace != 1");
  }
}

double purity(const ComplexMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return kernels::sum_sq(rho.data(), rho.size());
}

// Tr(rho W(t)) for the d=3 torus family expands exactly in the six closed
// form coefficients; the state-dependent functionals are fixed per scan.
struct TraceFunctionals {
  double sa, sb, sc;
  cplx tp, tq, tr;
};

TraceFunctionals trace_functionals(const ComplexMatrix& rho) {
  TraceFunctionals f{};
  f.sa = (rho(0, 0) + rho(4, 4) + rho(8, 8)).real();
  f.sb = (rho(1, 1) + rho(5, 5) + rho(6, 6)).real();
  f.sc = (rho(2, 2) + rho(3, 3) + rho(7, 7)).real();
  f.tp = rho(8, 0) + rho(0, 4) + rho(4, 8);
  f.tq = rho(6, 1) + rho(1, 5) + rho(5, 6);
  f.tr = rho(7, 2) + rho(2, 3) + rho(3, 7);
  return f;
}

double torus_value(const TraceFunctionals& f, const TorusPoint& t) {
  const ClosedFormCoeffs cf = closed_form_coeffs(t);
  const cplx cross = cf.p * f.tp + cf.q * f.tq + cf.r * f.tr;
  return cf.a * f.sa + cf.b * f.sb + cf.c * f.sc + 2.0 * cross.real();
}

}  // namespace

ComplexMatrix canonical_rho() {
  // clang-format off
  static const std::array<double, 81> num = {
      1, 0, 0, 0, 1, 0, 0, 0, 1,
      0, 2, 0, 0, 0,-1,-1, 0, 0,
      0, 0, 2,-1, 0, 0, 0,-1, 0,
      0, 0,-1, 2, 0, 0, 0,-1, 0,
      1, 0, 0, 0, 1, 0, 0, 0, 1,
      0,-1, 0, 0, 0, 2,-1, 0, 0,
      0,-1, 0, 0, 0,-1, 2, 0, 0,
      0, 0,-1,-1, 0, 0, 0, 2, 0,
      1, 0, 0, 0, 1, 0, 0, 0, 1};
  // clang-format on
  ComplexMatrix rho(9, 9);
  for (std::size_t i = 0; i < 81; ++i) rho.data()[i] = num[i] / 15.0;
  return rho;
}

double witness_expectation(const ComplexMatrix& rho, const ComplexMatrix& w) {
  if (rho.rows() != w.rows() || rho.cols() != w.cols() || !rho.is_square()) {
    throw std::invalid_argument("witness_expectation: dimension mismatch");
  }
  if (!rho.is_hermitian(kHermitianTol) || !w.is_hermitian(kHermitianTol)) {
    throw std::invalid_argument("witness_expectation: operators must be Hermitian");
  }
  // Tr(rho W) = <vec(rho), vec(W)> for Hermitian rho.
  const cplx val = kernels::dot_conj(rho.data(), w.data(), rho.size());
  if (std::abs(val.imag()) > 1e-12) {
    throw std::invalid_argument("witness_expectation: imaginary residue too large");
  }
  return val.real();
}

bool is_ppt(const ComplexMatrix& rho, BipartiteDims dims) {
  require_state(rho);
  if (!is_psd(rho, 1e-10)) throw std::invalid_argument("is_ppt: input is not PSD");
  const ComplexMatrix pt = partial_transpose(rho, dims, Subsystem::Second);
  return min_eigenvalue(pt) >= -1e-10;
}

bool ball_membership(const ComplexMatrix& rho) {
  if (!rho.is_square() || !rho.is_hermitian(kHermitianTol)) {
    throw std::invalid_argument("ball_membership: need a Hermitian square matrix");
  }
  if (std::abs(rho.trace() - cplx(1.0)) > 1e-10) {
    throw std::invalid_argument("ball_membership: trace != 1");
  }
  const double n = static_cast<double>(rho.rows());
  return purity(rho) <= 1.0 / (n - 1.0) + 1e-12;
}

std::vector<std::vector<double>> tomography_coeffs(const ComplexMatrix& rho,
                                                   const MubFamily& mubs) {
  require_state(rho);
  if (rho.rows() != mubs.d) throw std::invalid_argument("tomography: dimension mismatch");
  if (mubs.L != mubs.d + 1) {
    throw std::invalid_argument("tomography: incomplete family, need L = d+1 bases");
  }
  const double inv_d = 1.0 / static_cast<double>(mubs.d);
  std::vector<std::vector<double>> out;
  out.reserve(mubs.L);
  for (const auto& basis : mubs.bases) {
    std::vector<double> coeffs(mubs.d);
    for (std::size_t k = 0; k < mubs.d; ++k) {
      // Tr(rho P_k) = <psi_k| rho |psi_k>
      cplx acc = 0.0;
      for (std::size_t i = 0; i < mubs.d; ++i)
        for (std::size_t j = 0; j < mubs.d; ++j) {
          acc += std::conj(basis.u(i, k)) * rho(i, j) * basis.u(j, k);
        }
      coeffs[k] = acc.real() - inv_d;
    }
    out.push_back(std::move(coeffs));
  }
  return out;
}

ScanResult detection_scan(const ComplexMatrix& rho, ScanFamily family,
                          std::size_t points_per_angle, bool keep_samples) {
  if (rho.rows() != 9 || rho.cols() != 9) {
    throw std::invalid_argument("detection_scan: torus scans are defined for 3 (x) 3 states");
  }
  require_state(rho);
  if (points_per_angle < 1) throw std::invalid_argument("detection_scan: empty grid");

  const TraceFunctionals f = trace_functionals(rho);
  const double step = kTwoPi / static_cast<double>(points_per_angle);

  ScanResult res;
  res.family = family;
  res.points_per_angle = points_per_angle;
  res.min_value = std::numeric_limits<double>::infinity();

  auto consider = [&](const TorusPoint& t) {
    const double v = torus_value(f, t);
    if (keep_samples) res.samples.push_back({t, v});
    if (v < res.min_value) {  // strict: first minimum is lexicographically least
      res.min_value = v;
      res.argmin = t;
    }
  };

  if (family == ScanFamily::Full) {
    TorusPoint t{{0.0, 0.0, 0.0, 0.0}};
    for (std::size_t i1 = 0; i1 < points_per_angle; ++i1) {
      t.angles[0] = step * static_cast<double>(i1);
      for (std::size_t i2 = 0; i2 < points_per_angle; ++i2) {
        t.angles[1] = step * static_cast<double>(i2);
        for (std::size_t i3 = 0; i3 < points_per_angle; ++i3) {
          t.angles[2] = step * static_cast<double>(i3);
          for (std::size_t i4 = 0; i4 < points_per_angle; ++i4) {
            t.angles[3] = step * static_cast<double>(i4);
            consider(t);
          }
        }
      }
    }
  } else {
    const std::size_t free_index = static_cast<std::size_t>(family);
    TorusPoint t{{0.0, 0.0, 0.0, 0.0}};
    for (std::size_t i = 0; i < points_per_angle; ++i) {
      t.angles[free_index] = step * static_cast<double>(i);
      consider(t);
    }
  }

  res.detected = res.min_value < -kDetectionTol;
  res.inconclusive = !res.detected && res.min_value < 0.0;
  return res;
}

DetectionReport analyze_state(
    const ComplexMatrix& rho, BipartiteDims dims,
    const std::vector<std::pair<std::string, ComplexMatrix>>& witnesses) {
  require_state(rho);
  DetectionReport report;
  report.ppt = is_ppt(rho, dims);
  report.realignment = realignment_value(rho, dims);
  report.purity = purity(rho);
  report.in_ball = report.purity <= 1.0 / (static_cast<double>(rho.rows()) - 1.0) + 1e-12;
  for (const auto& [id, w] : witnesses) {
    const double v = witness_expectation(rho, w);
    report.witness_values.push_back({id, v});
    if (v < -kDetectionTol) report.detected = true;
  }
  return report;
}

}  // namespace mubw
