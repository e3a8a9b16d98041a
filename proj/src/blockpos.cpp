#include "mubw/blockpos.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mubw/linalg.hpp"
#include "mubw/rng.hpp"

namespace mubw {

namespace {

// Minimal eigenvector with the deterministic phase convention (first
// nonvanishing component real positive; lowest index on degeneracy).
std::vector<cplx> ground_vector(const ComplexMatrix& h, double& value) {
  const EigenSystem es = hermitian_eigensystem(h);
  value = es.values.front();
  const std::size_t n = h.rows();
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = es.vectors(i, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::abs(v[i]);
    if (a > 1e-8) {
      const cplx scale = std::conj(v[i]) / a;
      for (auto& e : v) e *= scale;
      break;
    }
  }
  return v;
}

ComplexMatrix effective_on_first(const ComplexMatrix& w, BipartiteDims dims,
                                 const std::vector<cplx>& y) {
  const std::size_t d1 = dims.d1, d2 = dims.d2;
  ComplexMatrix a(d1, d1);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j) {
      cplx acc = 0.0;
      for (std::size_t p = 0; p < d2; ++p)
        for (std::size_t q = 0; q < d2; ++q) {
          acc += std::conj(y[p]) * w(i * d2 + p, j * d2 + q) * y[q];
        }
      a(i, j) = acc;
    }
  return a;
}

ComplexMatrix effective_on_second(const ComplexMatrix& w, BipartiteDims dims,
                                  const std::vector<cplx>& x) {
  const std::size_t d1 = dims.d1, d2 = dims.d2;
  ComplexMatrix b(d2, d2);
  for (std::size_t p = 0; p < d2; ++p)
    for (std::size_t q = 0; q < d2; ++q) {
      cplx acc = 0.0;
      for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d1; ++j) {
          acc += std::conj(x[i]) * w(i * d2 + p, j * d2 + q) * x[j];
        }
      b(p, q) = acc;
    }
  return b;
}

}  // namespace

ProductMinResult min_product_expectation(const ComplexMatrix& w, BipartiteDims dims,
                                         const SeeSawConfig& cfg) {
  if (!w.is_square() || w.rows() != dims.total()) {
    throw std::invalid_argument("min_product_expectation: dimension mismatch");
  }
  if (!w.is_hermitian(kHermitianTol)) {
    throw std::invalid_argument("min_product_expectation: operator must be Hermitian");
  }
  if (cfg.restarts < 1 || cfg.max_iters < 1 || cfg.conv_tol <= 0.0) {
    throw std::invalid_argument("min_product_expectation: invalid configuration");
  }

  ProductMinResult best;
  best.value = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(restart));
    std::vector<cplx> y = rng.unit_vector(dims.d2);
    std::vector<cplx> x;
    double value = std::numeric_limits<double>::infinity();
    int iters = 0;

    for (; iters < cfg.max_iters; ++iters) {
      double vx = 0.0, vy = 0.0;
      x = ground_vector(effective_on_first(w, dims, y), vx);
      y = ground_vector(effective_on_second(w, dims, x), vy);
      // each half step solves its subproblem exactly
      if (vy > value + 1e-12) {
        throw std::runtime_error("min_product_expectation: objective increased");
      }
      const double improvement = value - vy;
      value = vy;
      if (improvement < cfg.conv_tol) {
        ++iters;
        break;
      }
    }

    best.total_iterations += iters;
    if (value < best.value) {  // strict: earliest restart wins ties
      best.value = value;
      best.x = x;
      best.y = y;
      best.best_restart = restart;
    }
  }
  return best;
}

std::string to_string(WitnessLabel label) {
  switch (label) {
    case WitnessLabel::PositiveSemidefinite: return "positive-semidefinite";
    case WitnessLabel::ProperWitness: return "proper-witness";
    case WitnessLabel::NotBlockPositive: return "not-block-positive";
    case WitnessLabel::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

WitnessClass classify(const ComplexMatrix& w, BipartiteDims dims, const SeeSawConfig& cfg) {
  WitnessClass out;
  out.min_eig = min_eigenvalue(w);
  ProductMinResult pm = min_product_expectation(w, dims, cfg);
  out.min_product_value = pm.value;
  out.x = std::move(pm.x);
  out.y = std::move(pm.y);

  if (pm.value < -1e-6) {
    out.label = WitnessLabel::NotBlockPositive;
  } else if (pm.value >= -1e-8) {
    out.label = out.min_eig >= -1e-10 ? WitnessLabel::PositiveSemidefinite
                                      : WitnessLabel::ProperWitness;
  } else {
    out.label = WitnessLabel::Inconclusive;
  }
  return out;
}

MapProbeReport map_positivity_probe(const MapOperator& phi, std::size_t samples,
                                    std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("map_positivity_probe: no samples");
  MapProbeReport rep;
  rep.samples = samples;
  rep.purity_bound = 1.0 / (static_cast<double>(phi.d) - 1.0);
  rep.worst_output_min_eig = std::numeric_limits<double>::infinity();
  rep.min_purity = std::numeric_limits<double>::infinity();

  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const ComplexMatrix p = rng.rank1_projector(phi.d);
    const ComplexMatrix out = phi.apply(p);
    const double lam = min_eigenvalue(out);
    double pur = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) pur += std::norm(out.data()[i]);
    rep.worst_output_min_eig = std::min(rep.worst_output_min_eig, lam);
    rep.max_purity = std::max(rep.max_purity, pur);
    rep.min_purity = std::min(rep.min_purity, pur);
    rep.max_trace_dev = std::max(rep.max_trace_dev, std::abs(out.trace() - cplx(1.0)));
  }
  rep.all_psd = rep.worst_output_min_eig >= -1e-10;
  rep.all_in_ball = rep.max_purity <= rep.purity_bound + 1e-10;
  return rep;
}

}  // namespace mubw
