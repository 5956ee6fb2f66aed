#include "wrightlens/grid.hpp"

#include <cmath>
#include <numbers>

#include "wrightlens/errors.hpp"

namespace wrightlens {

GridSpec GridSpec::disk(double r_max, int radii, int angles) {
  GridSpec g;
  g.radii = radii;
  g.angles = angles;
  g.r_max = r_max;
  g.r_min = r_max / radii;
  g.spacing = Spacing::Linear;
  return g;
}

void GridSpec::validate() const {
  if (radii < 1 || angles < 1) {
    throw ParameterError("grid needs at least one radius and one angle");
  }
  if (!(r_min > 0.0) || !(r_min <= r_max) || !(r_max < 1.0)) {
    throw ParameterError("grid radii must satisfy 0 < r_min <= r_max < 1");
  }
}

void GridSpec::validate_membership() const {
  validate();
  if (radii < 8) throw ParameterError("membership grid needs >= 8 radii");
  if (angles < 32) throw ParameterError("membership grid needs >= 32 angles");
  if (r_max > 0.95) {
    throw ParameterError("membership grid max radius must be <= 0.95");
  }
}

std::vector<double> GridSpec::ring_radii() const {
  std::vector<double> r(radii);
  if (radii == 1) {
    r[0] = r_max;
    return r;
  }
  for (int i = 0; i < radii; ++i) {
    const double t = double(i) / (radii - 1);
    r[i] = spacing == Spacing::Log ? r_min * std::pow(r_max / r_min, t)
                                   : r_min + (r_max - r_min) * t;
  }
  r.back() = r_max;
  return r;
}

std::vector<std::complex<double>> GridSpec::points() const {
  std::vector<std::complex<double>> pts;
  pts.reserve(std::size_t(radii) * angles);
  for (double r : ring_radii()) {
    for (int j = 0; j < angles; ++j) {
      pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / angles));
    }
  }
  return pts;
}

}  // namespace wrightlens
