#pragma once

#include <array>
#include <ostream>

#include <Eigen/Core>

#include "qcy/quaternion.hpp"

namespace qcy {

/// Number of real coordinates on G(H).
inline constexpr int kDim = 7;
/// Homogeneous dimension of G(H) under the parabolic dilations.
inline constexpr int kHomogeneousDim = 10;

using Coords = std::array<double, kDim>;
using Mat7 = Eigen::Matrix<double, kDim, kDim>;

/// Purely imaginary quaternion x i + y j + z k; the vertical coordinates.
struct ImQuaternion {
  double x{}, y{}, z{};

  constexpr ImQuaternion() = default;
  constexpr ImQuaternion(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}
  /// Drops the real part.
  static ImQuaternion from_imag(const Quaternion& q) { return {q.x, q.y, q.z}; }

  Quaternion as_quaternion() const { return {0.0, x, y, z}; }
  double norm2() const { return x * x + y * y + z * z; }

  friend ImQuaternion operator+(const ImQuaternion& a, const ImQuaternion& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend ImQuaternion operator-(const ImQuaternion& a) { return {-a.x, -a.y, -a.z}; }
  friend ImQuaternion operator*(double s, const ImQuaternion& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const ImQuaternion&, const ImQuaternion&) = default;
};

/// Element (q, omega) of G(H) = H x Im H with coordinates
/// (t1, x1, y1, z1, x, y, z), q = t1 + x1 i + y1 j + z1 k, omega = x i + y j + z k.
struct GroupPoint {
  Quaternion q{};
  ImQuaternion omega{};

  constexpr GroupPoint() = default;
  constexpr GroupPoint(Quaternion q_, ImQuaternion omega_) : q(q_), omega(omega_) {}

  static GroupPoint from_coords(const Coords& c) {
    return {{c[0], c[1], c[2], c[3]}, {c[4], c[5], c[6]}};
  }
  Coords coords() const { return {q.w, q.x, q.y, q.z, omega.x, omega.y, omega.z}; }

  friend bool operator==(const GroupPoint& a, const GroupPoint& b) { return a.q == b.q && a.omega == b.omega; }
};

std::ostream& operator<<(std::ostream& os, const GroupPoint& g);

/// (q0, w0) o (q, w) = (q0 + q, w + w0 + 2 Im(q0 conj(q))).
GroupPoint group_mul(const GroupPoint& g0, const GroupPoint& g);

/// (-q, -w); a two-sided inverse because Im(q conj(q)) = 0.
GroupPoint group_inv(const GroupPoint& g);

/// Parabolic dilation (lambda q, lambda^2 w). Throws DomainError for lambda <= 0.
GroupPoint dilation(double lambda, const GroupPoint& g);

/// Jacobian d(g0 o p)/dp; constant in p since left translation is affine.
Mat7 left_translation_jacobian(const GroupPoint& g0);

/// Diagonal Jacobian of the dilation by lambda.
Mat7 dilation_jacobian(double lambda);

}  // namespace qcy
