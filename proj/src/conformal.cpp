#include "qcy/conformal.hpp"

#include "qcy/errors.hpp"

namespace qcy {

namespace {

const Mat4& I(int s) { return complex_structures().I[static_cast<std::size_t>(s)]; }

// 2 - 4h + 3 h^-1 |grad h|^2 with the sphere normalization Scal = 48
double sphere_rhs(const HorizontalJet& j) { return 2.0 - 4.0 * j.value + 3.0 * j.grad.squaredNorm() / j.value; }

// nabla dh(I_s X, I_s grad h) as a covector in X
Vec4 twisted_hessian(const HorizontalJet& j, int s) { return I(s).transpose() * j.hessian * I(s) * j.grad; }

}  // namespace

HorizontalJet positive_jet(const ScalarField& h, const GroupPoint& p) {
  HorizontalJet j = horizontal_jet(h, p);
  if (!(j.value > 0.0)) throw DomainError("conformal factor must be positive");
  return j;
}

Mat4 casimir_dagger(const Mat4& m) {
  Mat4 r = Mat4::Zero();
  for (int s = 0; s < 3; ++s) r += I(s).transpose() * m * I(s);
  return r;
}

SymMatrix4 casimir_project(const SymMatrix4& m, CasimirPart part) {
  const Mat4 d = casimir_dagger(m.matrix());
  if (part == CasimirPart::Three) return SymMatrix4((d + m.matrix()) / 4.0);
  return SymMatrix4((3.0 * m.matrix() - d) / 4.0);
}

SymMatrix4 sym_part(const HorizontalJet& j) {
  Mat4 m = j.hessian;
  const auto& cs = complex_structures();
  for (int s = 0; s < 3; ++s) m += j.vertical(s) * cs.omega(s);
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  if (asym > 1e-9 * scale) throw ConsistencyError("corrected horizontal Hessian is not symmetric");
  return SymMatrix4(m);
}

SymMatrix4 sym_part(const ScalarField& h, const GroupPoint& p) { return sym_part(horizontal_jet(h, p)); }

SymMatrix4 torsion_T0_deformed(const ScalarField& h, const GroupPoint& p) {
  const HorizontalJet j = positive_jet(h, p);
  return SymMatrix4(casimir_project(sym_part(j), CasimirPart::MinusOne).matrix() / j.value);
}

SymMatrix4 U_deformed(const ScalarField& h, const GroupPoint& p) {
  const HorizontalJet j = positive_jet(h, p);
  const Mat4 b = sym_part(j).matrix() - 2.0 / j.value * j.grad * j.grad.transpose();
  const Mat4 p3 = casimir_project(SymMatrix4(b), CasimirPart::Three).matrix();
  const Mat4 trace_free = p3 - p3.trace() / 4.0 * Mat4::Identity();
  return SymMatrix4(trace_free / (2.0 * j.value));
}

double scal_deformed(const ScalarField& h, const GroupPoint& p, double base_scal) {
  const HorizontalJet j = positive_jet(h, p);
  // dimension 7: 8(n+2)^2 = 72, 8(n+2) = 24
  return 2.0 * j.value * base_scal - 72.0 * j.grad.squaredNorm() / j.value + 24.0 * j.hessian.trace();
}

double yamabe_residual_sphere_norm(const ScalarField& h, const GroupPoint& p) {
  const HorizontalJet j = positive_jet(h, p);
  return j.hessian.trace() - sphere_rhs(j);
}

double identity_e1_residual(const ScalarField& h, const Vec4& X, const GroupPoint& p) {
  const HorizontalJet j = positive_jet(h, p);
  Vec4 form = j.hessian * j.grad;
  for (int s = 0; s < 3; ++s) form += twisted_hessian(j, s);
  form -= sphere_rhs(j) * j.grad;
  return X.dot(form);
}

DVectors vector_D(const HorizontalJet& j) {
  const double h = j.value;
  if (!(h > 0.0)) throw DomainError("conformal factor must be positive");
  const double h2 = 1.0 / (h * h);
  DVectors out;
  out.sum.setZero();
  for (int i = 0; i < 3; ++i) {
    const int jj = (i + 1) % 3, k = (i + 2) % 3;
    Vec4 d = 0.25 * h2 * sphere_rhs(j) * j.grad;
    d += h2 * j.vertical(i) * (I(i).transpose() * j.grad);
    d -= 0.5 * h2 * (twisted_hessian(j, jj) + twisted_hessian(j, k));
    out.parts[static_cast<std::size_t>(i)] = d;
    out.sum += d;
  }
  return out;
}

DVectors vector_D(const ScalarField& h, const GroupPoint& p) { return vector_D(positive_jet(h, p)); }

HorizontalCovector vector_D_closed_form(const HorizontalJet& j) {
  const double h2 = 1.0 / (j.value * j.value);
  Vec4 inner = 3.0 * j.hessian * j.grad;
  Vec4 vert = Vec4::Zero();
  for (int s = 0; s < 3; ++s) {
    inner -= twisted_hessian(j, s);
    vert += j.vertical(s) * (I(s).transpose() * j.grad);
  }
  return 0.25 * h2 * inner + h2 * vert;
}

std::array<HorizontalCovector, 3> vector_F(const HorizontalCovector& d1, const HorizontalCovector& d2,
                                           const HorizontalCovector& d3) {
  return {I(0).transpose() * (-d1 + d2 + d3), I(1).transpose() * (d1 - d2 + d3), I(2).transpose() * (d1 + d2 - d3)};
}

double scalar_f(const ScalarField& h, const GroupPoint& p) {
  const HorizontalJet j = positive_jet(h, p);
  return 0.5 + j.value + 0.25 * j.grad.squaredNorm() / j.value;
}

std::array<HorizontalCovector, 3> divergence_a_terms(const HorizontalJet& j) {
  const double h = j.value;
  if (!(h > 0.0)) throw DomainError("conformal factor must be positive");
  const double g2 = j.grad.squaredNorm();
  std::array<HorizontalCovector, 3> out;
  for (int i = 0; i < 3; ++i) {
    Vec4 a = (-0.5 / (h * h) - 0.5 * g2 / (h * h * h)) * j.grad;
    for (int s : {(i + 1) % 3, (i + 2) % 3}) {
      a -= 0.5 / h * (I(s).transpose() * j.mixed.col(s));
      a += 0.5 / (h * h) * j.vertical(s) * (I(s).transpose() * j.grad);
      a += 0.25 / (h * h) * twisted_hessian(j, s);
    }
    out[static_cast<std::size_t>(i)] = a;
  }
  return out;
}

std::array<HorizontalCovector, 3> divergence_a_terms(const ScalarField& h, const GroupPoint& p) {
  return divergence_a_terms(positive_jet(h, p));
}

HorizontalCovector divergence_a_aggregate(const HorizontalJet& j) {
  const double h = j.value;
  const double g2 = j.grad.squaredNorm();
  Vec4 a = (-1.5 / (h * h) - 1.5 * g2 / (h * h * h)) * j.grad;
  for (int s = 0; s < 3; ++s) {
    a -= 1.0 / h * (I(s).transpose() * j.mixed.col(s));
    a += 1.0 / (h * h) * j.vertical(s) * (I(s).transpose() * j.grad);
    a += 0.5 / (h * h) * twisted_hessian(j, s);
  }
  return a;
}

}  // namespace qcy
