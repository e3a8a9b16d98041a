#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mubw/complex_matrix.hpp"
#include "mubw/witness.hpp"

namespace mubw {

struct SeeSawConfig {
  int restarts = 50;
  int max_iters = 200;
  double conv_tol = 1e-12;
  std::uint64_t seed = 0;
};

struct ProductMinResult {
  double value = 0.0;            // best local minimum found (upper bound on the true one)
  std::vector<cplx> x, y;        // minimizing product vector factors
  int best_restart = -1;
  int total_iterations = 0;
};

// Alternating minimization of <x (x) y |W| x (x) y> over unit vectors:
// for fixed y the effective d1 x d1 operator A(y)_{ij} = <i (x) y|W|j (x) y>
// is diagonalized exactly and x becomes its minimal eigenvector, then
// symmetrically for y. Each half step solves its subproblem exactly, so the
// objective never increases. A negative value certifies the absence of
// block-positivity; a nonnegative one is only an upper bound.
ProductMinResult min_product_expectation(const ComplexMatrix& w, BipartiteDims dims,
                                         const SeeSawConfig& cfg);

enum class WitnessLabel { PositiveSemidefinite, ProperWitness, NotBlockPositive, Inconclusive };

struct WitnessClass {
  WitnessLabel label = WitnessLabel::Inconclusive;
  double min_eig = 0.0;
  double min_product_value = 0.0;
  std::vector<cplx> x, y;
};

std::string to_string(WitnessLabel label);

// positive-semidefinite: min_eig >= -1e-10;
// proper-witness:        min_eig < -1e-10 and see-saw value >= -1e-8;
// not-block-positive:    see-saw value < -1e-6;
// inconclusive otherwise.
WitnessClass classify(const ComplexMatrix& w, BipartiteDims dims, const SeeSawConfig& cfg);

struct MapProbeReport {
  std::size_t samples = 0;
  double worst_output_min_eig = 0.0;  // min over samples of lambda_min(Phi P)
  double max_purity = 0.0;            // max over samples of Tr (Phi P)^2
  double min_purity = 0.0;
  double purity_bound = 0.0;          // 1/(d-1)
  double max_trace_dev = 0.0;         // worst |Tr Phi P - 1|
  bool all_psd = false;
  bool all_in_ball = false;
};

// Pushes random rank-1 projectors through the map and records how close the
// outputs come to violating positivity, unit trace, or the purity bound
// Tr (Phi P)^2 <= 1/(d-1).
MapProbeReport map_positivity_probe(const MapOperator& phi, std::size_t samples,
                                    std::uint64_t seed);

}  // namespace mubw
