#include "mubw/rotation.hpp"

#include <cmath>
#include <stdexcept>

namespace mubw {

AxisRotation identity_rotation(std::size_t d) {
  AxisRotation o{d, std::vector<double>(d * d, 0.0)};
  for (std::size_t i = 0; i < d; ++i) o(i, i) = 1.0;
  return o;
}

AxisRotation rodrigues(const std::array<double, 3>& axis, double angle) {
  const auto [n1, n2, n3] = axis;
  if (std::abs(n1 * n1 + n2 * n2 + n3 * n3 - 1.0) > kRotationTol) {
    throw std::invalid_argument("rodrigues: axis is not a unit vector");
  }
  const double phi = reduce_angle(angle);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double k = 1.0 - c;
  AxisRotation o{3, {c + n1 * n1 * k, n1 * n2 * k - n3 * s, n1 * n3 * k + n2 * s,
                     n1 * n2 * k + n3 * s, c + n2 * n2 * k, n2 * n3 * k - n1 * s,
                     n3 * n1 * k - n2 * s, n3 * n2 * k + n1 * s, c + n3 * n3 * k}};
  return o;
}

AxisRotation rotation_nstar_d3(double angle) {
  const double phi = reduce_angle(angle);
  const double third = 1.0 / 3.0;
  const double c1 = 2.0 * third * std::cos(phi) + third;
  const double c2 = 2.0 * third * std::cos(phi - 2.0 * M_PI / 3.0) + third;
  const double c3 = 2.0 * third * std::cos(phi + 2.0 * M_PI / 3.0) + third;
  return AxisRotation{3, {c1, c2, c3, c3, c1, c2, c2, c3, c1}};
}

AxisRotation permutation_rotation(const std::vector<std::size_t>& image) {
  const std::size_t d = image.size();
  std::vector<bool> seen(d, false);
  for (const std::size_t t : image) {
    if (t >= d || seen[t]) {
      throw std::invalid_argument("permutation_rotation: image is not a bijection");
    }
    seen[t] = true;
  }
  AxisRotation o{d, std::vector<double>(d * d, 0.0)};
  for (std::size_t j = 0; j < d; ++j) o(image[j], j) = 1.0;
  return o;
}

bool validate_axis_rotation(const AxisRotation& o) {
  const std::size_t d = o.d;
  if (d == 0 || o.m.size() != d * d) return false;
  // O^T O = I
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < d; ++k) dot += o(k, i) * o(k, j);
      if (std::abs(dot - (i == j ? 1.0 : 0.0)) > kRotationTol) return false;
    }
  }
  // O n* = n*  <=>  every row sums to 1
  for (std::size_t i = 0; i < d; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < d; ++j) sum += o(i, j);
    if (std::abs(sum - 1.0) > kRotationTol * std::sqrt(static_cast<double>(d))) return false;
  }
  return true;
}

double reduce_angle(double angle) {
  double r = std::fmod(angle, 2.0 * M_PI);
  if (r < 0.0) r += 2.0 * M_PI;
  return r;
}

}  // namespace mubw
