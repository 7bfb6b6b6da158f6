#include <doctest.h>

#include <cmath>

#include "qcy/conformal.hpp"
#include "qcy/extremal.hpp"
#include "qcy/sampling.hpp"

using namespace qcy;

namespace {

ScalarField quartic() {
  return autodiff_lift("1+|q|^4", [](const auto& x) {
    const auto s = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    return 1.0 + s * s;
  });
}

ScalarField tilted() {
  return autodiff_lift("2+0.3y+0.2 t1 x1+|q|^2", [](const auto& x) {
    return 2.0 + 0.3 * x[5] + 0.2 * x[0] * x[1] + x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  });
}

FamilyParams random_family(Sampler& s) { return {s.uniform(0.1, 10.0), s.uniform(0.1, 10.0), s.point(1.0)}; }

}  // namespace

TEST_CASE("Casimir projections") {
  const SymMatrix4 id(Mat4::Identity());
  CHECK((casimir_project(id, CasimirPart::Three).matrix() - Mat4::Identity()).norm() < 1e-15);
  CHECK(casimir_project(id, CasimirPart::MinusOne).matrix().norm() < 1e-15);
  Sampler s(0, 1);
  for (int k = 0; k < 100; ++k) {
    const SymMatrix4 m(s.symmetric());
    const Mat4 p3 = casimir_project(m, CasimirPart::Three).matrix();
    const Mat4 pm = casimir_project(m, CasimirPart::MinusOne).matrix();
    // eigenvectors of dagger with eigenvalues 3 and -1
    CHECK((casimir_dagger(p3) - 3.0 * p3).norm() < 1e-13);
    CHECK((casimir_dagger(pm) + pm).norm() < 1e-13);
    CHECK((p3 - m.trace() / 4.0 * Mat4::Identity()).norm() < 1e-13);
    CHECK(std::abs(pm.trace()) < 1e-13);
    CHECK((p3 + pm - m.matrix()).norm() < 1e-13);
  }
}

TEST_CASE("sym_part") {
  Sampler s(0, 2);
  const GroupPoint p = s.point(1.0);
  CHECK(sym_part(constant_field(2.0), p).frobenius() == 0.0);
  CHECK((sym_part(q_norm2_field(), p).matrix() - 2.0 * Mat4::Identity()).norm() < 1e-14);
  // vertical dependence drops out of the symmetric part of the horizontal Hessian
  const SymMatrix4 w = sym_part(coordinate_field(4), p);
  CHECK(w.frobenius() < 1e-14);
}

TEST_CASE("T0 of the deformed structure") {
  Sampler s(0, 3);
  CHECK(torsion_T0_deformed(constant_field(3.0), s.point(1.0)).frobenius() == 0.0);
  for (int f = 0; f < 10; ++f) {
    const ScalarField h = h_family(random_family(s));
    for (int k = 0; k < 10; ++k) CHECK(torsion_T0_deformed(h, s.point(2.0)).frobenius() < 1e-10);
  }
  CHECK(torsion_T0_deformed(quartic(), {{1, 0, 0, 0}, {}}).frobenius() > 1e-3);
  CHECK(torsion_T0_deformed(tilted(), s.point(1.0)).frobenius() > 1e-3);
  CHECK_THROWS_AS(torsion_T0_deformed(constant_field(0.0), GroupPoint{}), DomainError);
  CHECK_THROWS_AS(torsion_T0_deformed(constant_field(-1.0), GroupPoint{}), DomainError);
}

TEST_CASE("U of the deformed structure vanishes in dimension seven") {
  Sampler s(0, 4);
  CHECK(U_deformed(constant_field(2.0), s.point(1.0)).frobenius() == 0.0);
  for (int k = 0; k < 50; ++k) {
    const GroupPoint p = s.point(2.0);
    CHECK(U_deformed(h_family(random_family(s)), p).frobenius() < 1e-12);
    CHECK(U_deformed(quartic(), p).frobenius() < 1e-12);
    CHECK(U_deformed(tilted(), p).frobenius() < 1e-12);
  }
  CHECK_THROWS_AS(U_deformed(constant_field(0.0), GroupPoint{}), DomainError);
}

TEST_CASE("deformed scalar curvature") {
  Sampler s(0, 5);
  CHECK(scal_deformed(constant_field(0.5), s.point(1.0), 2.75) == doctest::Approx(2.75).epsilon(1e-15));
  const ScalarField sphere = scale_field(bubble_denominator_field(), 1.0 / 64.0);
  for (int k = 0; k < 50; ++k) CHECK(std::abs(scal_deformed(sphere, s.point(2.0), 0.0) - 6.0) <= 6e-8);
  for (int k = 0; k < 10; ++k) {
    const double c = s.uniform(0.1, 10.0), nu = s.uniform(0.1, 10.0);
    CHECK(scal_deformed(h_family({c, nu, {}}), GroupPoint{}, 0.0) == doctest::Approx(384.0 * c * nu).epsilon(1e-12));
  }
  CHECK_THROWS_AS(scal_deformed(constant_field(-0.5), GroupPoint{}, 0.0), DomainError);
}

TEST_CASE("Yamabe residual for the sphere normalization") {
  const GroupPoint o{};
  CHECK(yamabe_residual_sphere_norm(constant_field(0.5), o) == 0.0);
  CHECK(yamabe_residual_sphere_norm(constant_field(1.0), o) == 2.0);
  const ScalarField shifted =
      autodiff_lift("|q|^2+1/2", [](const auto& x) { return 0.5 + x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]; });
  CHECK(yamabe_residual_sphere_norm(shifted, o) == doctest::Approx(8.0).epsilon(1e-14));
}

TEST_CASE("identity e1 residual") {
  Sampler s(0, 7);
  CHECK(identity_e1_residual(constant_field(0.5), Vec4(1, 2, 3, 4), s.point(1.0)) == 0.0);
  for (const auto& h : {quartic(), tilted(), h_family(random_family(s))})
    for (int k = 0; k < 20; ++k) {
      const GroupPoint p = s.point(1.0);
      const Vec4 X = s.vec4();
      const double expect = yamabe_residual_sphere_norm(h, p) * X.dot(horizontal_gradient(h, p));
      CHECK(std::abs(identity_e1_residual(h, X, p) - expect) <= 1e-10 * (1.0 + std::abs(expect)));
    }
}

TEST_CASE("D vectors") {
  Sampler s(0, 8);
  const DVectors d0 = vector_D(constant_field(2.0), s.point(1.0));
  for (const auto& v : d0.parts) CHECK(v.isZero(0.0));
  CHECK(d0.sum.isZero(0.0));
  for (const auto& h : {quartic(), tilted(), h_family(random_family(s))})
    for (int k = 0; k < 20; ++k) {
      const GroupPoint p = s.point(1.5);
      const HorizontalJet j = positive_jet(h, p);
      const DVectors d = vector_D(j);
      CHECK((d.parts[0] + d.parts[1] + d.parts[2] - d.sum).norm() < 1e-13 * (1.0 + d.sum.norm()));
      Vec4 e1;
      for (int a = 0; a < 4; ++a) e1(a) = identity_e1_residual(h, Vec4::Unit(a), p);
      const Vec4 gap = vector_D_closed_form(j) - d.sum - 0.75 / (j.value * j.value) * e1;
      CHECK(gap.norm() < 1e-10 * (1.0 + d.sum.norm()));
    }
}

TEST_CASE("F vectors") {
  const Vec4 z = Vec4::Zero(), e1 = Vec4::Unit(0);
  for (const auto& f : vector_F(z, z, z)) CHECK(f.isZero(0.0));
  const auto F = vector_F(e1, z, z);
  const auto& cs = complex_structures();
  CHECK((F[0] + cs.I[0].transpose() * e1).norm() == 0.0);
  CHECK((F[1] - cs.I[1].transpose() * e1).norm() == 0.0);
}

TEST_CASE("scalar f") {
  const GroupPoint o{};
  CHECK(scalar_f(constant_field(0.5), o) == 1.0);
  CHECK(scalar_f(constant_field(1.0), o) == 1.5);
  CHECK(scalar_f(h_family({1.0, 1.0, {}}), o) == 1.5);
  CHECK_THROWS_AS(scalar_f(constant_field(0.0), o), DomainError);
}

TEST_CASE("A terms of the divergence formula") {
  Sampler s(0, 9);
  for (const auto& a : divergence_a_terms(constant_field(0.5), s.point(1.0))) CHECK(a.isZero(0.0));
  for (const auto& h : {quartic(), tilted(), h_family(random_family(s))})
    for (int k = 0; k < 20; ++k) {
      const HorizontalJet j = positive_jet(h, s.point(1.0));
      const auto a = divergence_a_terms(j);
      const Vec4 agg = divergence_a_aggregate(j);
      CHECK((a[0] + a[1] + a[2] - agg).norm() <= 1e-12 * (1.0 + agg.norm()));
    }
  CHECK_THROWS_AS(divergence_a_terms(constant_field(-1.0), GroupPoint{}), DomainError);
}
