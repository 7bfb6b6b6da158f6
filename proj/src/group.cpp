#include "qcy/group.hpp"

namespace qcy {

std::ostream& operator<<(std::ostream& os, const GroupPoint& g) {
  const auto c = g.coords();
  os << '[';
  for (int i = 0; i < kDim; ++i) os << (i ? ", " : "") << c[i];
  return os << ']';
}

GroupPoint group_mul(const GroupPoint& g0, const GroupPoint& g) {
  const Quaternion twist = g0.q * g.q.conj();
  return {g0.q + g.q, g.omega + g0.omega + 2.0 * ImQuaternion::from_imag(twist)};
}

GroupPoint group_inv(const GroupPoint& g) { return {-g.q, -g.omega}; }

GroupPoint dilation(double lambda, const GroupPoint& g) {
  if (!(lambda > 0.0)) throw DomainError("dilation: lambda must be positive");
  return {g.q * lambda, (lambda * lambda) * g.omega};
}

Mat7 left_translation_jacobian(const GroupPoint& g0) {
  Mat7 jac = Mat7::Identity();
  // d/dq_a of 2 Im(q0 conj(u_a)) for the unit directions u_a in {1, i, j, k}.
  const std::array<Quaternion, 4> units = {Quaternion::identity(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  for (int a = 0; a < 4; ++a) {
    const Quaternion d = g0.q * units[a].conj();
    jac(4, a) = 2.0 * d.x;
    jac(5, a) = 2.0 * d.y;
    jac(6, a) = 2.0 * d.z;
  }
  return jac;
}

Mat7 dilation_jacobian(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("dilation: lambda must be positive");
  Mat7 jac = Mat7::Zero();
  for (int i = 0; i < 4; ++i) jac(i, i) = lambda;
  for (int i = 4; i < kDim; ++i) jac(i, i) = lambda * lambda;
  return jac;
}

}  // namespace qcy
