#pragma once

// Hard-coded axis-angle rotation for rotational-invariance tests.

#include <cmath>

#include "spincorr/vec3.hpp"

namespace testsupport {

inline spincorr::Vec3 rotated(const spincorr::Vec3& v, const spincorr::UnitVec3& axis,
                              double angle) {
  // Rodrigues formula.
  const spincorr::Vec3 k = axis.vec();
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return v * c + cross(k, v) * s + k * (dot(k, v) * (1.0 - c));
}

inline spincorr::UnitVec3 rotated(const spincorr::UnitVec3& u,
                                  const spincorr::UnitVec3& axis, double angle) {
  return spincorr::UnitVec3(rotated(u.vec(), axis, angle));
}

}  // namespace testsupport
