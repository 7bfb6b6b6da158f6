#pragma once

#include <array>

#include "qcy/frame.hpp"

namespace qcy {

/// Symmetric 4x4 matrix over the horizontal frame. The constructor
/// symmetrizes its argument, so the stored matrix is symmetric exactly.
class SymMatrix4 {
 public:
  SymMatrix4() : m_(Mat4::Zero()) {}
  explicit SymMatrix4(const Mat4& m) : m_(0.5 * (m + m.transpose())) {}

  const Mat4& matrix() const { return m_; }
  double operator()(int a, int b) const { return m_(a, b); }
  double trace() const { return m_.trace(); }
  double frobenius() const { return m_.norm(); }

 private:
  Mat4 m_;
};

/// Components of a horizontal one-form against e_a (equivalently, of its
/// metric dual vector).
using HorizontalCovector = Vec4;

enum class CasimirPart { Three, MinusOne };

/// dagger(m)(X, Y) = sum_s m(I_s X, I_s Y).
Mat4 casimir_dagger(const Mat4& m);

/// Projection onto the [3] (dagger = 3) or [-1] (dagger = -1) component.
SymMatrix4 casimir_project(const SymMatrix4& m, CasimirPart part);

/// nabla dh + sum_s dh(xi_s) omega_s. Throws ConsistencyError if the result is
/// not symmetric to 1e-9.
SymMatrix4 sym_part(const ScalarField& h, const GroupPoint& p);
SymMatrix4 sym_part(const HorizontalJet& j);

/// Torsion T0 after the conformal change eta -> eta / (2h) of the flat structure.
SymMatrix4 torsion_T0_deformed(const ScalarField& h, const GroupPoint& p);

/// Torsion U after the same conformal change (identically zero in dimension 7,
/// computed rather than assumed).
SymMatrix4 U_deformed(const ScalarField& h, const GroupPoint& p);

/// qc-scalar curvature after the conformal change, from the base value.
double scal_deformed(const ScalarField& h, const GroupPoint& p, double base_scal);

/// lap h - (2 - 4h + 3 h^-1 |grad h|^2); zero iff the deformed structure has
/// the scalar curvature of the standard sphere.
double yamabe_residual_sphere_norm(const ScalarField& h, const GroupPoint& p);

/// nabla dh(X, grad h) + sum_s nabla dh(I_s X, I_s grad h) - (2 - 4h + 3 h^-1 |grad h|^2) dh(X).
double identity_e1_residual(const ScalarField& h, const Vec4& X, const GroupPoint& p);

struct DVectors {
  std::array<HorizontalCovector, 3> parts;
  HorizontalCovector sum;
};

DVectors vector_D(const ScalarField& h, const GroupPoint& p);
DVectors vector_D(const HorizontalJet& j);

/// Closed form of D valid when the deformed [-1] torsion vanishes.
HorizontalCovector vector_D_closed_form(const HorizontalJet& j);

/// F_s from D_1, D_2, D_3 (F_1(X) = -D_1(I_1 X) + D_2(I_1 X) + D_3(I_1 X), cyclically).
std::array<HorizontalCovector, 3> vector_F(const HorizontalCovector& d1, const HorizontalCovector& d2,
                                           const HorizontalCovector& d3);

/// 1/2 + h + 1/4 h^-1 |grad h|^2.
double scalar_f(const ScalarField& h, const GroupPoint& p);

/// A_1, A_2, A_3 from the closed form for a 3-Sasakian conformal deformation.
std::array<HorizontalCovector, 3> divergence_a_terms(const ScalarField& h, const GroupPoint& p);
std::array<HorizontalCovector, 3> divergence_a_terms(const HorizontalJet& j);

/// The aggregate A = A_1 + A_2 + A_3, evaluated from its own closed form.
HorizontalCovector divergence_a_aggregate(const HorizontalJet& j);

/// Horizontal jet of h at p after checking h(p) > 0.
HorizontalJet positive_jet(const ScalarField& h, const GroupPoint& p);

}  // namespace qcy
