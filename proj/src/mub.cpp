#include "mubw/mub.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mubw/kernels.hpp"
#include "mubw/linalg.hpp"

namespace mubw {

namespace {

cplx root_of_unity(std::size_t d, std::size_t power) {
  return std::polar(1.0, 2.0 * M_PI * static_cast<double>(power % d) / static_cast<double>(d));
}

void fix_phase(ComplexMatrix& v, std::size_t col) {
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const cplx e = v(i, col);
    const double a = std::abs(e);
    if (a > 1e-8) {
      const cplx scale = std::conj(e) / a;
      for (std::size_t r = 0; r < v.rows(); ++r) v(r, col) *= scale;
      return;
    }
  }
}

}  // namespace

std::vector<cplx> Basis::vector(std::size_t k) const {
  std::vector<cplx> v(u.rows());
  for (std::size_t i = 0; i < u.rows(); ++i) v[i] = u(i, k);
  return v;
}

ComplexMatrix Basis::projector(std::size_t k) const {
  const std::size_t d = u.rows();
  ComplexMatrix p(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p(i, j) = u(i, k) * std::conj(u(j, k));
  return p;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

ComplexMatrix weyl_operator(std::size_t d, WeylIndex idx) {
  if (d < 2) throw std::invalid_argument("weyl_operator: d must be >= 2");
  const std::size_t k = idx.k % d, l = idx.l % d;
  ComplexMatrix u(d, d);
  for (std::size_t m = 0; m < d; ++m) {
    u(m, (m + l) % d) = root_of_unity(d, k * m);
  }
  return u;
}

bool weyl_relation_check(std::size_t d, double tol) {
  if (d < 2) throw std::invalid_argument("weyl_relation_check: d must be >= 2");
  // In the convention U_{kl} = sum_m w^{km} |m><m+l| the algebra closes as
  //   U_{kl} U_{rs} = w^{rl} U_{k+r,l+s},   U_{kl}^dag = w^{kl} U_{-k,-l}.
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      const ComplexMatrix ukl = weyl_operator(d, {k, l});
      const ComplexMatrix rhs =
          root_of_unity(d, k * l) * weyl_operator(d, {(d - k) % d, (d - l) % d});
      if (max_abs_diff(ukl.dagger(), rhs) > tol) return false;
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t s = 0; s < d; ++s) {
          const ComplexMatrix prod = ukl * weyl_operator(d, {r, s});
          const ComplexMatrix expect =
              root_of_unity(d, r * l) * weyl_operator(d, {(k + r) % d, (l + s) % d});
          if (max_abs_diff(prod, expect) > tol) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<WeylIndex>> commuting_families(std::size_t d) {
  if (!is_prime(d)) {
    throw std::invalid_argument("commuting_families: d must be prime");
  }
  std::vector<std::vector<WeylIndex>> families;
  std::vector<WeylIndex> directions;
  for (std::size_t l = 0; l < d; ++l) directions.push_back({1, l});
  directions.push_back({0, 1});
  for (const auto& dir : directions) {
    std::vector<WeylIndex> fam;
    for (std::size_t t = 1; t < d; ++t) {
      fam.push_back({(t * dir.k) % d, (t * dir.l) % d});
    }
    families.push_back(std::move(fam));
  }
  return families;
}

MubFamily mub_from_families(std::size_t d) {
  const auto families = commuting_families(d);
  MubFamily out{d, families.size(), {}};

  for (const auto& fam : families) {
    auto lead = *std::min_element(fam.begin(), fam.end(), [](WeylIndex a, WeylIndex b) {
      return a.k != b.k ? a.k < b.k : a.l < b.l;
    });
    const ComplexMatrix u = weyl_operator(d, lead);

    // The eigenvalue arguments of a nonzero-index Weyl operator are spread
    // by multiples of 2pi/d, so a phase-tilted Hermitian combination
    // e^{-i th} U + h.c. with th = pi/(3d) has d distinct eigenvalues and
    // shares the eigenbasis of U.
    const double th = M_PI / (3.0 * static_cast<double>(d));
    const cplx e = std::polar(1.0, -th);
    ComplexMatrix h = u;
    h *= e;
    ComplexMatrix hd = u.dagger();
    hd *= std::conj(e);
    h += hd;
    EigenSystem es = hermitian_eigensystem(h);

    // gap check: degenerate spectrum would mean the eigenbasis is not pinned
    double min_gap = 2.0;
    for (std::size_t i = 0; i + 1 < es.values.size(); ++i) {
      min_gap = std::min(min_gap, es.values[i + 1] - es.values[i]);
    }
    if (min_gap < 1e-8) {
      throw std::runtime_error("mub_from_families: unresolved eigenbasis degeneracy");
    }

    // order columns by the argument of the eigenvalue of U itself
    std::vector<double> args(d);
    ComplexMatrix& v = es.vectors;
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<cplx> col(d), ucol(d);
      for (std::size_t i = 0; i < d; ++i) col[i] = v(i, j);
      for (std::size_t i = 0; i < d; ++i) {
        cplx acc = 0.0;
        for (std::size_t t = 0; t < d; ++t) acc += u(i, t) * col[t];
        ucol[i] = acc;
      }
      const cplx lambda = kernels::dot_conj(col.data(), ucol.data(), d);
      double arg = std::atan2(lambda.imag(), lambda.real());
      if (arg < -1e-9) arg += 2.0 * M_PI;
      args[j] = arg;
    }
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return args[a] < args[b]; });

    ComplexMatrix basis(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) basis(i, j) = v(i, order[j]);
    for (std::size_t j = 0; j < d; ++j) fix_phase(basis, j);
    out.bases.push_back({std::move(basis)});
  }
  return out;
}

MubFamily mub_d3() {
  const cplx w = root_of_unity(3, 1);
  const cplx wc = std::conj(w);
  const double s = 1.0 / std::sqrt(3.0);

  ComplexMatrix u2(3, 3, {1, 1, 1, 1, wc, w, 1, w, wc});
  u2 *= s;
  ComplexMatrix u3(3, 3, {1, 1, 1, 1, w, wc, wc, w, 1});
  u3 *= s;
  const ComplexMatrix u4 = u3.conjugate();

  MubFamily f{3, 4, {}};
  f.bases.push_back({ComplexMatrix::identity(3)});
  f.bases.push_back({u2});
  f.bases.push_back({u3});
  f.bases.push_back({u4});
  return f;
}

bool verify_mub(const MubFamily& f, double tol) {
  if (f.bases.size() != f.L || f.L == 0 || f.L > f.d + 1) return false;
  for (const auto& b : f.bases) {
    if (b.u.rows() != f.d || b.u.cols() != f.d) return false;
    for (std::size_t k = 0; k < f.d; ++k) {
      for (std::size_t l = k; l < f.d; ++l) {
        cplx dot = 0.0;
        for (std::size_t i = 0; i < f.d; ++i) dot += std::conj(b.u(i, k)) * b.u(i, l);
        if (std::abs(dot - (k == l ? 1.0 : 0.0)) > tol) return false;
      }
    }
  }
  const double target = 1.0 / static_cast<double>(f.d);
  for (std::size_t a = 0; a < f.L; ++a) {
    for (std::size_t b = a + 1; b < f.L; ++b) {
      for (std::size_t k = 0; k < f.d; ++k) {
        for (std::size_t l = 0; l < f.d; ++l) {
          cplx dot = 0.0;
          for (std::size_t i = 0; i < f.d; ++i) {
            dot += std::conj(f.bases[a].u(i, k)) * f.bases[b].u(i, l);
          }
          if (std::abs(std::norm(dot) - target) > tol) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace mubw
