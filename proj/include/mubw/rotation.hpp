#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace mubw {

// Real orthogonal d x d matrix fixing the uniform axis
// n* = (1,...,1)/sqrt(d).
struct AxisRotation {
  std::size_t d = 0;
  std::vector<double> m;  // row-major

  double operator()(std::size_t i, std::size_t j) const { return m[i * d + j]; }
  double& operator()(std::size_t i, std::size_t j) { return m[i * d + j]; }
};

inline constexpr double kRotationTol = 1e-12;

AxisRotation identity_rotation(std::size_t d);

// Proper rotation in R^3 around a unit axis (counterclockwise looking down
// the axis). Throws unless |axis| = 1 within kRotationTol.
AxisRotation rodrigues(const std::array<double, 3>& axis, double angle);

// Circulant one-parameter family around n* in R^3: first row
// (c1, c2, c3) with c_j = (2/3)cos(angle -+ 2pi/3 shifts) + 1/3, rows
// cyclically shifted right. Equals rodrigues(n*, angle) transposed.
AxisRotation rotation_nstar_d3(double angle);

// 0/1 matrix sending basis vector i to image[i]; image must be a bijection
// on {0..d-1}.
AxisRotation permutation_rotation(const std::vector<std::size_t>& image);

// True iff orthogonal and fixes n* (both within kRotationTol).
bool validate_axis_rotation(const AxisRotation& o);

// Reduce to [0, 2pi).
double reduce_angle(double angle);

}  // namespace mubw
