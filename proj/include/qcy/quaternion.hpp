#pragma once

#include <cmath>
#include <ostream>

#include "qcy/errors.hpp"

namespace qcy {

inline double value_of(double v) { return v; }

/// Hamilton quaternion w + x i + y j + z k with i j = k (so I1 I2 I3 = -1).
///
/// Templated on the scalar so the same closed forms (Cayley maps, sigma)
/// can be evaluated on doubles and on second-order jets.
template <class T>
struct Quat {
  T w{}, x{}, y{}, z{};

  constexpr Quat() = default;
  constexpr Quat(T w_, T x_, T y_, T z_) : w(w_), x(x_), y(y_), z(z_) {}
  explicit constexpr Quat(T real) : w(real), x(T(0)), y(T(0)), z(T(0)) {}

  static constexpr Quat identity() { return Quat(T(1), T(0), T(0), T(0)); }
  static constexpr Quat i() { return Quat(T(0), T(1), T(0), T(0)); }
  static constexpr Quat j() { return Quat(T(0), T(0), T(1), T(0)); }
  static constexpr Quat k() { return Quat(T(0), T(0), T(0), T(1)); }

  Quat conj() const { return Quat(w, -x, -y, -z); }
  T norm2() const { return w * w + x * x + y * y + z * z; }
  Quat real_part() const { return Quat(w, T(0), T(0), T(0)); }
  Quat imag_part() const { return Quat(T(0), x, y, z); }

  friend Quat operator+(const Quat& a, const Quat& b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Quat operator-(const Quat& a, const Quat& b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Quat operator-(const Quat& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend Quat operator*(const Quat& a, const T& s) { return {a.w * s, a.x * s, a.y * s, a.z * s}; }
  friend Quat operator*(const T& s, const Quat& a) { return a * s; }
  friend Quat operator/(const Quat& a, const T& s) { return {a.w / s, a.x / s, a.y / s, a.z / s}; }

  friend Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
};

using Quaternion = Quat<double>;

template <class T>
Quat<T> quat_mul(const Quat<T>& a, const Quat<T>& b) {
  return a * b;
}

/// conj(a) / |a|^2. Throws DomainError for the zero quaternion.
template <class T>
Quat<T> quat_inv(const Quat<T>& a) {
  const T n2 = a.norm2();
  if (!(value_of(n2) > 0.0)) throw DomainError("quat_inv: zero quaternion has no inverse");
  return a.conj() / n2;
}

inline double abs(const Quaternion& a) { return std::sqrt(a.norm2()); }

inline bool operator==(const Quaternion& a, const Quaternion& b) {
  return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

}  // namespace qcy
