#include "qcy/cayley.hpp"

#include <cmath>

#include "qcy/errors.hpp"

namespace qcy {

namespace {

constexpr double kPoleTol = 1e-28;

Quaternion checked_inv(const Quaternion& a, const char* what) {
  if (a.norm2() < kPoleTol) throw SingularityError(what);
  return quat_inv(a);
}

}  // namespace

SpherePoint::SpherePoint(const Quaternion& q, const Quaternion& p) {
  const double n = std::sqrt(q.norm2() + p.norm2());
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("SpherePoint: cannot normalize");
  q_ = q / n;
  p_ = p / n;
}

SigmaPoint to_sigma(const GroupPoint& g) {
  return {g.q, Quaternion(g.q.norm2(), -g.omega.x, -g.omega.y, -g.omega.z)};
}

GroupPoint from_sigma(const SigmaPoint& s) { return {s.q1, -ImQuaternion::from_imag(s.p1)}; }

SigmaPoint cayley_forward_sigma(const SpherePoint& s) {
  const Quaternion one = Quaternion::identity();
  const Quaternion inv = checked_inv(one + s.p(), "cayley_forward: pole p = -1");
  return {inv * s.q(), inv * (one - s.p())};
}

GroupPoint cayley_forward(const SpherePoint& s) { return from_sigma(cayley_forward_sigma(s)); }

SpherePoint cayley_inverse(const GroupPoint& g) {
  const SigmaPoint s = to_sigma(g);
  const Quaternion one = Quaternion::identity();
  const Quaternion inv = checked_inv(one + s.p1, "cayley_inverse: pole p1 = -1");
  return SpherePoint(2.0 * (inv * s.q1), (one - s.p1) * inv);
}

GroupPoint cayley2_forward(const SpherePoint& s) {
  const Quaternion one = Quaternion::identity();
  const Quaternion inv = checked_inv(one - s.p(), "cayley2_forward: pole p = 1");
  return from_sigma({-(inv * s.q()), inv * (one + s.p())});
}

double cayley_conformal_factor(const GroupPoint& g) {
  const SigmaPoint s = to_sigma(g);
  return 8.0 / (Quaternion::identity() + s.p1).norm2();
}

GroupPoint sigma(const GroupPoint& g) {
  Quaternion q2, w2;
  sigma_coords(g.q, g.omega.as_quaternion(), q2, w2);
  return {q2, ImQuaternion::from_imag(w2)};
}

std::array<Jet2, kDim> sigma_jets(const GroupPoint& g) {
  const auto x = seed_coordinates(g.coords());
  const Quat<Jet2> q(x[0], x[1], x[2], x[3]);
  const Quat<Jet2> w(Jet2(0.0), x[4], x[5], x[6]);
  Quat<Jet2> q2, w2;
  sigma_coords(q, w, q2, w2);
  return {q2.w, q2.x, q2.y, q2.z, w2.x, w2.y, w2.z};
}

}  // namespace qcy
