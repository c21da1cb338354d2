#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spincorr/rng.hpp"
#include "spincorr/vec3.hpp"

namespace spincorr {

/// Uniform draw on the unit sphere by inverse CDF: the polar cosine is
/// uniform in [-1, 1] and the azimuth uniform in [0, 2pi). Consumes exactly
/// two doubles from the stream, z first, then phi.
inline UnitVec3 sample_unit_vector(SeededRng& rng) {
  const double z = 1.0 - 2.0 * rng.next_unit_double();
  const double phi = 2.0 * std::numbers::pi * rng.next_unit_double();
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return UnitVec3(r * std::cos(phi), r * std::sin(phi), z);
}

/// Solid angle of the spherical cap {v : v.u > c} for any fixed unit u.
inline double cap_solid_angle_above(double c) {
  if (!(c >= -1.0 && c <= 1.0)) {
    throw std::domain_error("cap_solid_angle_above: cosine outside [-1, 1]");
  }
  return 2.0 * std::numbers::pi * (1.0 - c);
}

/// Solid angle of the complementary region {v : v.u < c}. Together the two
/// caps partition the sphere: above(c) + below(c) = 4pi.
inline double cap_solid_angle_below(double c) {
  if (!(c >= -1.0 && c <= 1.0)) {
    throw std::domain_error("cap_solid_angle_below: cosine outside [-1, 1]");
  }
  return 2.0 * std::numbers::pi * (1.0 + c);
}

}  // namespace spincorr
