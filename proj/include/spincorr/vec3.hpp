#pragma once

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spincorr {

// Measurement outcomes and sign values are plain ints constrained to {+1, -1}.
using Sign = int;

/// Sign value function. Ties are resolved deterministically: sgn(0) = +1.
/// The zero argument is a measure-zero event for the continuous models, but
/// floating point can realize it, and a fixed rule keeps runs reproducible.
inline Sign sgn(double t) {
  assert(std::isfinite(t));
  return t < 0.0 ? -1 : +1;
}

/// Free 3-vector. Used for Bloch vectors, where the only constraint is
/// |P| <= 1, enforced where the model is constructed.
struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& u, const Vec3& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}

constexpr Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// A point on the unit 2-sphere: hidden variables and measurement directions.
///
/// Construction accepts vectors whose norm is within 1e-9 of 1 and snaps them
/// to unit norm; anything further off is rejected. After construction the
/// norm is 1 within 1e-12.
class UnitVec3 {
 public:
  explicit UnitVec3(const Vec3& v) : v_(v) {
    const double n = norm(v);
    if (!(std::abs(n - 1.0) <= 1e-9)) {
      throw std::domain_error("UnitVec3: norm " + std::to_string(n) +
                              " is not within 1e-9 of 1");
    }
    v_ = v * (1.0 / n);
  }
  UnitVec3(double x, double y, double z) : UnitVec3(Vec3{x, y, z}) {}

  /// Normalizes an arbitrary vector; rejects zero or non-finite input.
  static UnitVec3 normalized(const Vec3& v) {
    const double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw std::domain_error("UnitVec3::normalized: zero or non-finite vector");
    }
    return UnitVec3(v * (1.0 / n), Unchecked{});
  }

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

  UnitVec3 operator-() const { return UnitVec3(-v_, Unchecked{}); }

 private:
  struct Unchecked {};
  UnitVec3(const Vec3& v, Unchecked) : v_(v) {}
  Vec3 v_;
};

inline double dot(const UnitVec3& u, const UnitVec3& v) { return dot(u.vec(), v.vec()); }
inline double dot(const Vec3& u, const UnitVec3& v) { return dot(u, v.vec()); }
inline double dot(const UnitVec3& u, const Vec3& v) { return dot(u.vec(), v); }

}  // namespace spincorr
