#pragma once

#include <array>

#include <Eigen/Core>

#include "qcy/field.hpp"

namespace qcy {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;
using Mat43 = Eigen::Matrix<double, 4, 3>;
using FrameRows = Eigen::Matrix<double, 4, kDim>;
using VerticalRows = Eigen::Matrix<double, 3, kDim>;

/// Horizontal frame indices, in the order T1, X1, Y1, Z1.
enum FrameIndex : int { kT1 = 0, kX1 = 1, kY1 = 2, kZ1 = 3 };

/// Coefficients of the left-invariant frame at a point, in coordinate
/// derivatives. Row a of `horizontal` is e_a; rows of `vertical` are
/// xi_s = 2 d/dx, 2 d/dy, 2 d/dz.
struct FrameCoeffs {
  FrameRows horizontal;
  VerticalRows vertical;
};

FrameCoeffs frame_at(const GroupPoint& p);

/// I_1, I_2, I_3 acting on frame coordinates: I_s e_a = sum_b I_s(b, a) e_b.
/// The fundamental forms are omega_s(e_a, e_b) = g(I_s e_a, e_b) = I_s(b, a).
struct ComplexStructures {
  std::array<Mat4, 3> I;

  /// omega_s as a matrix with entry (a, b) = omega_s(e_a, e_b).
  Mat4 omega(int s) const { return I[static_cast<std::size_t>(s)].transpose(); }
};

/// Derived once from the frame commutators [e_a, e_b] = -2 sum_s omega_s(e_a, e_b) xi_s
/// and checked against the quaternion relations; throws ConsistencyError if
/// the derivation does not produce a hypercomplex triple.
const ComplexStructures& complex_structures();

/// Derivative tensor of the (affine) frame coefficients:
/// d coef(e_a, c) / dp_k, returned as dcoef[a](c, k).
const std::array<Mat7, 4>& frame_coefficient_derivatives();

/// Second-order horizontal data of a field at a point.
struct HorizontalJet {
  double value = 0.0;
  Vec4 grad;        // e_a f
  Vec3 vertical;    // xi_s f
  Mat4 hessian;     // e_a (e_b f)
  Mat43 mixed;      // e_a (xi_s f)
};

HorizontalJet horizontal_jet(const Jet2& euclidean, const GroupPoint& p);
HorizontalJet horizontal_jet(const ScalarField& f, const GroupPoint& p);

Vec4 horizontal_gradient(const ScalarField& f, const GroupPoint& p);
Vec3 vertical_derivatives(const ScalarField& f, const GroupPoint& p);
Mat4 horizontal_hessian(const ScalarField& f, const GroupPoint& p);
double sub_laplacian(const ScalarField& f, const GroupPoint& p);

/// Max-norm of [e_a, e_b](p) + 2 sum_s omega_s(e_a, e_b) xi_s.
double commutator_audit(int a, int b, const GroupPoint& p);

/// Components of [e_a, e_b](p) in coordinate derivatives.
Vec7 frame_commutator(int a, int b, const GroupPoint& p);

}  // namespace qcy
