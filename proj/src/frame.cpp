#include "qcy/frame.hpp"

#include <algorithm>
#include <cmath>

#include "qcy/errors.hpp"

namespace qcy {

FrameCoeffs frame_at(const GroupPoint& p) {
  const double t1 = p.q.w, x1 = p.q.x, y1 = p.q.y, z1 = p.q.z;
  FrameCoeffs f;
  f.horizontal.setZero();
  f.horizontal.leftCols<4>().setIdentity();
  f.horizontal.row(kT1).tail<3>() << 2 * x1, 2 * y1, 2 * z1;
  f.horizontal.row(kX1).tail<3>() << -2 * t1, -2 * z1, 2 * y1;
  f.horizontal.row(kY1).tail<3>() << 2 * z1, -2 * t1, -2 * x1;
  f.horizontal.row(kZ1).tail<3>() << -2 * y1, 2 * x1, -2 * t1;
  f.vertical.setZero();
  f.vertical.rightCols<3>() = 2.0 * Eigen::Matrix3d::Identity();
  return f;
}

const std::array<Mat7, 4>& frame_coefficient_derivatives() {
  static const std::array<Mat7, 4> table = [] {
    std::array<Mat7, 4> d;
    const FrameRows base = frame_at(GroupPoint{}).horizontal;
    for (auto& m : d) m.setZero();
    for (int k = 0; k < kDim; ++k) {
      Coords c{};
      c[static_cast<std::size_t>(k)] = 1.0;
      const FrameRows unit = frame_at(GroupPoint::from_coords(c)).horizontal;
      for (int a = 0; a < 4; ++a) d[static_cast<std::size_t>(a)].col(k) = (unit.row(a) - base.row(a)).transpose();
    }
    return d;
  }();
  return table;
}

Vec7 frame_commutator(int a, int b, const GroupPoint& p) {
  if (a < 0 || a > 3 || b < 0 || b > 3) throw DomainError("frame_commutator: horizontal index out of range");
  const FrameRows c = frame_at(p).horizontal;
  const auto& d = frame_coefficient_derivatives();
  // [e_a, e_b]^k = e_a(coef_b^k) - e_b(coef_a^k)
  Vec7 out = d[static_cast<std::size_t>(b)] * c.row(a).transpose() - d[static_cast<std::size_t>(a)] * c.row(b).transpose();
  return out;
}

const ComplexStructures& complex_structures() {
  static const ComplexStructures cs = [] {
    ComplexStructures r;
    for (auto& m : r.I) m.setZero();
    const GroupPoint origin{};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const Vec7 br = frame_commutator(a, b, origin);
        for (int s = 0; s < 3; ++s) r.I[static_cast<std::size_t>(s)](b, a) = -br(4 + s) / 4.0;
      }
    const Mat4 id = Mat4::Identity();
    double err = 0.0;
    for (const auto& m : r.I) {
      err = std::max(err, (m * m + id).cwiseAbs().maxCoeff());
      err = std::max(err, (m + m.transpose()).cwiseAbs().maxCoeff());
      err = std::max(err, (m.transpose() * m - id).cwiseAbs().maxCoeff());
    }
    err = std::max(err, (r.I[0] * r.I[1] - r.I[2]).cwiseAbs().maxCoeff());
    if (err > 1e-15) throw ConsistencyError("frame commutators do not define a hypercomplex structure");
    return r;
  }();
  return cs;
}

HorizontalJet horizontal_jet(const Jet2& j, const GroupPoint& p) {
  const FrameCoeffs fc = frame_at(p);
  const FrameRows& c = fc.horizontal;
  const auto& d = frame_coefficient_derivatives();
  const Vec7 g = j.gradient();
  const Mat7 h = j.hessian();
  HorizontalJet out;
  out.value = j.value;
  out.grad = c * g;
  out.vertical = fc.vertical * g;
  out.hessian = c * h * c.transpose();
  // first-order part: e_a applied to the coefficients of e_b
  for (int b = 0; b < 4; ++b) out.hessian.col(b) += c * (d[static_cast<std::size_t>(b)].transpose() * g);
  out.mixed = c * h * fc.vertical.transpose();
  return out;
}

HorizontalJet horizontal_jet(const ScalarField& f, const GroupPoint& p) { return horizontal_jet(f.eval_jet(p), p); }

Vec4 horizontal_gradient(const ScalarField& f, const GroupPoint& p) {
  return frame_at(p).horizontal * f.eval_grad(p).grad;
}

Vec3 vertical_derivatives(const ScalarField& f, const GroupPoint& p) {
  return frame_at(p).vertical * f.eval_grad(p).grad;
}

Mat4 horizontal_hessian(const ScalarField& f, const GroupPoint& p) { return horizontal_jet(f, p).hessian; }

double sub_laplacian(const ScalarField& f, const GroupPoint& p) { return horizontal_hessian(f, p).trace(); }

double commutator_audit(int a, int b, const GroupPoint& p) {
  Vec7 r = frame_commutator(a, b, p);
  const auto& cs = complex_structures();
  const VerticalRows v = frame_at(p).vertical;
  for (int s = 0; s < 3; ++s) r += 2.0 * cs.omega(s)(a, b) * v.row(s).transpose();
  return r.cwiseAbs().maxCoeff();
}

}  // namespace qcy
