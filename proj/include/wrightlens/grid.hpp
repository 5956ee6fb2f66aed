#pragma once

#include <complex>
#include <vector>

namespace wrightlens {

/// Polar sampling grid: `radii` rings between r_min and r_max, `angles`
/// equally spaced points on each ring starting at angle 0.
struct GridSpec {
  enum class Spacing { Log, Linear };

  int radii = 16;
  int angles = 64;
  double r_min = 0.05;
  double r_max = 0.95;
  Spacing spacing = Spacing::Log;

  /// Rings r_max * k / radii, k = 1..radii: the disk |z| <= r_max.
  static GridSpec disk(double r_max, int radii, int angles);

  /// Throws ParameterError unless 0 < r_min <= r_max < 1, radii >= 1 and
  /// angles >= 1.
  void validate() const;
  /// Stricter bounds used by the membership scans: r_max <= 0.95,
  /// radii >= 8, angles >= 32.
  void validate_membership() const;

  std::vector<double> ring_radii() const;
  std::vector<std::complex<double>> points() const;
};

}  // namespace wrightlens
