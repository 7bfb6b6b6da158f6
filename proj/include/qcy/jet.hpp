#pragma once

#include <array>
#include <cmath>
#include <span>

#include <Eigen/Core>

#include "qcy/group.hpp"

namespace qcy {

using Vec7 = Eigen::Matrix<double, kDim, 1>;

/// Value, Euclidean gradient and Hessian of a scalar on R^7.
///
/// Doubles as the number type of second-order forward-mode differentiation:
/// arithmetic on Jet2 propagates the truncated Taylor expansion exactly, with
/// all 7 directions seeded at once. The Hessian is stored as the packed upper
/// triangle (28 entries), so it is symmetric by construction.
class Jet2 {
 public:
  static constexpr int kHessSize = kDim * (kDim + 1) / 2;

  double value = 0.0;
  std::array<double, kDim> grad{};
  std::array<double, kHessSize> hess_upper{};

  constexpr Jet2() = default;
  constexpr Jet2(double v) : value(v) {}  // NOLINT: constants promote implicitly

  /// The coordinate function x_i.
  static Jet2 variable(double v, int i) {
    Jet2 j(v);
    j.grad[static_cast<std::size_t>(i)] = 1.0;
    return j;
  }

  static constexpr int index(int i, int j) {
    if (i > j) std::swap(i, j);
    return i * kDim - i * (i - 1) / 2 + (j - i);
  }

  double hess(int i, int j) const { return hess_upper[static_cast<std::size_t>(index(i, j))]; }
  double& hess(int i, int j) { return hess_upper[static_cast<std::size_t>(index(i, j))]; }

  Vec7 gradient() const { return Eigen::Map<const Vec7>(grad.data()); }
  Mat7 hessian() const {
    Mat7 h;
    for (int i = 0; i < kDim; ++i)
      for (int j = i; j < kDim; ++j) h(i, j) = h(j, i) = hess(i, j);
    return h;
  }

  Jet2& operator+=(const Jet2& o) {
    value += o.value;
    for (int i = 0; i < kDim; ++i) grad[i] += o.grad[i];
    for (int i = 0; i < kHessSize; ++i) hess_upper[i] += o.hess_upper[i];
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    value -= o.value;
    for (int i = 0; i < kDim; ++i) grad[i] -= o.grad[i];
    for (int i = 0; i < kHessSize; ++i) hess_upper[i] -= o.hess_upper[i];
    return *this;
  }
  Jet2& operator*=(double s) {
    value *= s;
    for (auto& g : grad) g *= s;
    for (auto& h : hess_upper) h *= s;
    return *this;
  }
  Jet2& operator*=(const Jet2& o);
  Jet2& operator/=(const Jet2& o);
  Jet2& operator/=(double s) { return *this *= (1.0 / s); }
};

inline double value_of(const Jet2& j) { return j.value; }

/// phi(u) for a scalar function with known phi(u), phi'(u), phi''(u).
inline Jet2 chain(const Jet2& u, double f0, double f1, double f2) {
  Jet2 r(f0);
  for (int i = 0; i < kDim; ++i) r.grad[i] = f1 * u.grad[i];
  int k = 0;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j, ++k) r.hess_upper[k] = f1 * u.hess_upper[k] + f2 * u.grad[i] * u.grad[j];
  return r;
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r(a.value * b.value);
  for (int i = 0; i < kDim; ++i) r.grad[i] = a.value * b.grad[i] + b.value * a.grad[i];
  int k = 0;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j, ++k)
      r.hess_upper[k] = a.value * b.hess_upper[k] + b.value * a.hess_upper[k] + a.grad[i] * b.grad[j] +
                        a.grad[j] * b.grad[i];
  return r;
}

inline Jet2 reciprocal(const Jet2& a) {
  const double inv = 1.0 / a.value;
  return chain(a, inv, -inv * inv, 2.0 * inv * inv * inv);
}

inline Jet2& Jet2::operator*=(const Jet2& o) { return *this = *this * o; }
inline Jet2& Jet2::operator/=(const Jet2& o) { return *this = *this * reciprocal(o); }

inline Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
inline Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
inline Jet2 operator-(Jet2 a) { return a *= -1.0; }
inline Jet2 operator*(Jet2 a, double s) { return a *= s; }
inline Jet2 operator*(double s, Jet2 a) { return a *= s; }
inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }
inline Jet2 operator/(Jet2 a, double s) { return a *= (1.0 / s); }
inline Jet2 operator/(double s, const Jet2& b) { return s * reciprocal(b); }
inline Jet2 operator+(Jet2 a, double s) { a.value += s; return a; }
inline Jet2 operator+(double s, Jet2 a) { a.value += s; return a; }
inline Jet2 operator-(Jet2 a, double s) { a.value -= s; return a; }
inline Jet2 operator-(double s, const Jet2& a) { return s + (-a); }

inline Jet2 sqrt(const Jet2& a) {
  if (!(a.value > 0.0)) throw DomainError("sqrt: jet argument must be positive");
  const double s = std::sqrt(a.value);
  return chain(a, s, 0.5 / s, -0.25 / (s * a.value));
}

/// a^p for real p; a must be positive unless p is a non-negative integer.
inline Jet2 pow(const Jet2& a, double p) {
  if (!(a.value > 0.0)) {
    if (p == std::floor(p) && p >= 0.0) {
      const double v = std::pow(a.value, p);
      const double d1 = p >= 1.0 ? p * std::pow(a.value, p - 1.0) : 0.0;
      const double d2 = p >= 2.0 ? p * (p - 1.0) * std::pow(a.value, p - 2.0) : 0.0;
      return chain(a, v, d1, d2);
    }
    throw DomainError("pow: non-integer power of a non-positive jet");
  }
  const double v = std::pow(a.value, p);
  return chain(a, v, p * v / a.value, p * (p - 1.0) * v / (a.value * a.value));
}

inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value);
  return chain(a, e, e, e);
}

inline Jet2 log(const Jet2& a) {
  if (!(a.value > 0.0)) throw DomainError("log: jet argument must be positive");
  return chain(a, std::log(a.value), 1.0 / a.value, -1.0 / (a.value * a.value));
}

inline Jet2 sin(const Jet2& a) { return chain(a, std::sin(a.value), std::cos(a.value), -std::sin(a.value)); }
inline Jet2 cos(const Jet2& a) { return chain(a, std::cos(a.value), -std::sin(a.value), -std::cos(a.value)); }

/// Seeds the 7 coordinate jets at p.
inline std::array<Jet2, kDim> seed_coordinates(const Coords& p) {
  std::array<Jet2, kDim> x;
  for (int i = 0; i < kDim; ++i) x[static_cast<std::size_t>(i)] = Jet2::variable(p[static_cast<std::size_t>(i)], i);
  return x;
}

/// Chain rule for outer(inner(p)), where `outer` is the jet of a function at
/// y = inner(p) in y-coordinates and `inner` holds the jets of y_c(p).
Jet2 compose(const Jet2& outer, std::span<const Jet2, kDim> inner);

/// Chain rule through the affine map p -> A p + b: gradient A^T g, Hessian A^T H A.
Jet2 compose_linear(const Jet2& outer, const Mat7& jacobian);

/// Value and gradient only; the cheap path used inside quadrature.
struct Jet1 {
  double value = 0.0;
  Vec7 grad = Vec7::Zero();
};

}  // namespace qcy
