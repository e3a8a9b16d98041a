#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mubw/complex_matrix.hpp"
#include "mubw/mub.hpp"
#include "mubw/witness.hpp"

namespace mubw {

// Witness expectations above -kDetectionTol never count as detections;
// values in (-kDetectionTol, 0) are inconclusive.
inline constexpr double kDetectionTol = 1e-10;

// The 3 (x) 3 PPT entangled state shipped with the library: 1/15 times an
// integer matrix mixing the maximally entangled projector with two shifted
// triples of basis-pair coherences.
ComplexMatrix canonical_rho();

// Tr(rho W) as a real number; throws if dimensions differ, either operator
// fails the Hermiticity tolerance, or the imaginary residue exceeds 1e-12.
double witness_expectation(const ComplexMatrix& rho, const ComplexMatrix& w);

// Positive partial transpose test. Requires a unit-trace PSD input.
bool is_ppt(const ComplexMatrix& rho, BipartiteDims dims);

// Tr(rho^2) <= 1/(n-1) + 1e-12 for an n-dimensional unit-trace Hermitian.
bool ball_membership(const ComplexMatrix& rho);

// a_k^(alpha) = Tr(rho P_k^(alpha)) - 1/d per basis; needs the complete
// family L = d+1.
std::vector<std::vector<double>> tomography_coeffs(const ComplexMatrix& rho,
                                                   const MubFamily& mubs);

enum class ScanFamily { Angle1, Angle2, Angle3, Angle4, Full };

struct ScanSample {
  TorusPoint point;
  double value;
};

struct ScanResult {
  ScanFamily family;
  std::size_t points_per_angle;
  double min_value;
  TorusPoint argmin;
  bool detected;      // min_value < -kDetectionTol
  bool inconclusive;  // min_value in [-kDetectionTol, 0)
  std::vector<ScanSample> samples;  // filled when keep_samples
};

// Minimum of Tr(rho W(t)) over a uniform angle grid, either one free angle
// (others pinned to zero) or the full L = 4 torus. d = 3 only. Ties broken
// toward the lexicographically smallest grid point.
ScanResult detection_scan(const ComplexMatrix& rho, ScanFamily family,
                          std::size_t points_per_angle, bool keep_samples = false);

struct WitnessValue {
  std::string id;
  double value;
};

struct DetectionReport {
  bool ppt = false;
  double realignment = 0.0;
  std::vector<WitnessValue> witness_values;
  double purity = 0.0;
  bool in_ball = false;
  bool detected = false;  // some witness value < -kDetectionTol
};

DetectionReport analyze_state(const ComplexMatrix& rho, BipartiteDims dims,
                              const std::vector<std::pair<std::string, ComplexMatrix>>& witnesses);

}  // namespace mubw
