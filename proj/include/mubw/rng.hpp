#pragma once

#include <cstdint>
#include <vector>

#include "mubw/complex_matrix.hpp"

namespace mubw {

// SplitMix64-based generator. Distributions are implemented directly on the
// raw 64-bit stream so that seeded runs are bit-identical across platforms
// and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Decorrelated substream for (seed, index); used for per-restart streams.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  double uniform();   // [0, 1)
  double gaussian();  // standard normal (Box-Muller)
  cplx gaussian_cplx();

  std::vector<cplx> unit_vector(std::size_t dim);
  ComplexMatrix matrix(std::size_t rows, std::size_t cols);  // iid complex gaussian
  ComplexMatrix hermitian(std::size_t n);
  ComplexMatrix rank1_projector(std::size_t n);
  ComplexMatrix density(std::size_t n);  // Ginibre-induced state

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace mubw
