#pragma once

#include "qcy/group.hpp"
#include "qcy/jet.hpp"

namespace qcy {

/// Point (q, p) of the unit sphere in H x H; renormalized on construction.
class SpherePoint {
 public:
  SpherePoint(const Quaternion& q, const Quaternion& p);

  const Quaternion& q() const { return q_; }
  const Quaternion& p() const { return p_; }

 private:
  Quaternion q_, p_;
};

/// Point (q', p') of the quadric Re p' = |q'|^2 in H x H.
struct SigmaPoint {
  Quaternion q1, p1;
};

/// (q, w) -> (q, |q|^2 - w).
SigmaPoint to_sigma(const GroupPoint& g);
/// (q', p') -> (q', -Im p'); assumes Re p' = |q'|^2.
GroupPoint from_sigma(const SigmaPoint& s);

/// q1 = (1 + p)^-1 q, p1 = (1 + p)^-1 (1 - p). Pole at p = -1 (hence q = 0).
SigmaPoint cayley_forward_sigma(const SpherePoint& s);
GroupPoint cayley_forward(const SpherePoint& s);

/// q = 2 (1 + p1)^-1 q1, p = (1 - p1)(1 + p1)^-1.
SpherePoint cayley_inverse(const GroupPoint& g);

/// q2 = -(1 - p)^-1 q, p2 = (1 - p)^-1 (1 + p). Pole at p = 1.
GroupPoint cayley2_forward(const SpherePoint& s);

/// 8 / |1 + p1|^2 with p1 = |q|^2 - w: the factor relating the pulled back
/// standard contact form of the sphere to the flat one.
double cayley_conformal_factor(const GroupPoint& g);

/// The involution sigma in coordinates, generic over the scalar type so it
/// can be run on jets: q2 = -(|q|^2 - w)^-1 q, w2 = -w / (|q|^4 + |w|^2).
template <class T>
void sigma_coords(const Quat<T>& q, const Quat<T>& w, Quat<T>& q2, Quat<T>& w2) {
  const Quat<T> pp(q.norm2(), -w.x, -w.y, -w.z);
  const T n2 = pp.norm2();
  if (!(value_of(n2) > 0.0)) throw SingularityError("sigma: the identity has no image");
  q2 = -(pp.conj() / n2) * q;
  w2 = -(w / n2);
}

GroupPoint sigma(const GroupPoint& g);

/// Jets of the 7 coordinates of sigma(p), as functions of p.
std::array<Jet2, kDim> sigma_jets(const GroupPoint& g);

}  // namespace qcy
