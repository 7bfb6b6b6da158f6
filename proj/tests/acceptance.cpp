// Acceptance criteria, one PASS/FAIL line each. Exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/special_functions/beta.hpp>

#include "qcy/best_constant.hpp"
#include "qcy/cayley.hpp"
#include "qcy/conformal.hpp"
#include "qcy/extremal.hpp"
#include "qcy/optimize.hpp"
#include "qcy/qmatrix.hpp"
#include "qcy/quadrature.hpp"
#include "qcy/sampling.hpp"

using namespace qcy;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [FAILED]");
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double dist(const GroupPoint& a, const GroupPoint& b) {
  const auto x = a.coords(), y = b.coords();
  double m = 0.0;
  for (int i = 0; i < kDim; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

double rel_pde(const ScalarField& u, const GroupPoint& p) {
  return std::abs(pde_residual(u, p)) / std::pow(u.value(p), 1.5);
}

double bubble_oracle() {
  return 2 * kPi * kPi * 4 * kPi * 0.5 * boost::math::beta(1.5, 3.5) * 0.5 * boost::math::beta(2.0, 5.0);
}

Outcome extremal_pde() {
  Outcome o;
  Sampler s(1, 1);
  const ScalarField u = ubar_field();
  double plain = 0.0, moved = 0.0;
  for (int k = 0; k < 1000; ++k) plain = std::max(plain, rel_pde(u, s.point(3.0)));
  for (int k = 0; k < 1000; ++k) {
    const ScalarField w = dilate_field(translate_field(u, s.point(3.0)), s.uniform(0.3, 3.0));
    moved = std::max(moved, rel_pde(w, s.point(3.0)));
  }
  o.require(plain <= 1e-9, "ubar " + sci(plain));
  o.require(moved <= 1e-9, "translated+dilated " + sci(moved));
  return o;
}

Outcome family_certification() {
  Outcome o;
  Sampler s(1, 2);
  double worst = 0.0;
  for (int f = 0; f < 20; ++f) {
    const ScalarField h = h_family({s.uniform(0.1, 10.0), s.uniform(0.1, 10.0), s.point(1.0)});
    for (int k = 0; k < 20; ++k) worst = std::max(worst, torsion_T0_deformed(h, s.point(2.0)).frobenius());
  }
  const ScalarField quartic = autodiff_lift("1+|q|^4", [](const auto& x) {
    const auto r = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    return 1.0 + r * r;
  });
  const double control = torsion_T0_deformed(quartic, {Quaternion::identity(), {}}).frobenius();
  o.require(worst <= 1e-8, "family |T0| " + sci(worst));
  o.require(control >= 1e-3, "control |T0| " + sci(control));
  return o;
}

Outcome collapse() {
  Outcome o;
  Sampler s(1, 3);
  const std::vector<ScalarField> fields = {
      h_family({2.0, 0.5, s.point(1.0)}), scale_field(bubble_denominator_field(), 1.0 / 64.0), constant_field(0.7),
      autodiff_lift("1+|q|^4", [](const auto& x) {
        const auto r = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
        return 1.0 + r * r;
      }),
      autodiff_lift("2+sin(x)+|q|^2", [](const auto& x) {
        return 2.0 + sin(x[4]) + x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
      })};
  double u = 0.0;
  for (const auto& h : fields)
    for (int k = 0; k < 50; ++k) u = std::max(u, U_deformed(h, s.point(2.0)).frobenius());
  double p3 = 0.0;
  for (int k = 0; k < 100; ++k) {
    const SymMatrix4 m(s.symmetric());
    p3 = std::max(p3, (casimir_project(m, CasimirPart::Three).matrix() - m.trace() / 4 * Mat4::Identity()).norm());
  }
  o.require(u <= 1e-12, "|U| " + sci(u));
  o.require(p3 <= 1e-13, "P3 " + sci(p3));
  return o;
}

Outcome scalar_curvature() {
  Outcome o;
  Sampler s(1, 4);
  const ScalarField h = scale_field(bubble_denominator_field(), 1.0 / 64.0);
  double lo = 1e300, hi = -1e300;
  for (int k = 0; k < 50; ++k) {
    const double v = scal_deformed(h, s.point(2.0), 0.0);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double q = kHomogeneousDim;
  o.require(std::max(hi - 6.0, 6.0 - lo) / 6.0 <= 1e-8, "spread " + sci((hi - lo) / 6.0));
  o.require(4 * (q + 2) / (q - 2) == 6.0, "6 = 4(Q+2)/(Q-2)");
  return o;
}

Outcome best_constant() {
  Outcome o;
  const auto res = integrate_biradial(
      {[](double r, double rho) { return std::pow((1 + r * r) * (1 + r * r) + rho * rho, -5.0); }, 20.0}, 1e-11);
  const double exact = bubble_oracle();
  o.require(std::abs(res.value / exact - 1.0) <= 1e-8, "integral " + std::to_string(res.value) + " vs pi^4/384");
  const MCResult mc = integrate_mc(
      [](const GroupPoint& p) { return std::pow(std::pow(1 + p.q.norm2(), 2) + p.omega.norm2(), -5.0); }, 20.0, 1000000,
      1);
  o.require(std::abs(mc.value - exact) <= 3 * mc.stderr_, "MC z " + std::to_string(std::abs(mc.value - exact) / mc.stderr_));
  const BestConstantReport b = best_constant_report();
  bool complete = b.comparisons.size() >= 8;
  int flagged = 0;
  for (const auto& c : b.comparisons) {
    complete = complete && std::isfinite(c.printed);
    if (!std::isnan(c.computed)) {
      complete = complete && std::isfinite(c.ratio);
      flagged += c.flagged;
    }
  }
  o.require(complete, "reconciliation lists " + std::to_string(b.comparisons.size()) + " candidates, " +
                          std::to_string(flagged) + " flagged");
  return o;
}

Outcome quotient_extremality() {
  Outcome o;
  const QuotientReport base = fs_quotient(ubar_field());
  Sampler s(1, 6);
  double inv = 0.0;
  for (int k = 0; k < 5; ++k) {
    const ScalarField w = dilate_field(translate_field(scale_field(ubar_field(), s.uniform(0.1, 10.0)), s.point(1.0)),
                                       s.uniform(0.3, 3.0));
    inv = std::max(inv, std::abs(fs_quotient(w).quotient / base.quotient - 1.0));
  }
  o.require(inv <= 1e-5, "invariance " + sci(inv));
  const double parts = std::abs(base.numerator / base.power_integral - 1.0);
  o.require(parts <= 1e-4, "parts " + sci(parts));
  double value = 0.0, center = 0.0;
  for (int k = 0; k < 10; ++k) {
    const GroupPoint planted = s.point(0.5);
    SearchPoint init;
    init.log_nu = s.uniform(-0.5, 0.5);
    init.center = group_mul(group_inv(planted), s.point(0.2));
    MinimizeOptions mo;
    mo.seed = static_cast<std::uint64_t>(k);
    const MinimizeResult r = minimize_quotient(init, translate_field(ubar_field(), planted), mo);
    value = std::max(value, std::abs(r.value / base.quotient - 1.0));
    center = std::max(center, dist(r.optimum.center, group_inv(planted)));
  }
  o.require(value <= 1e-4, "10 starts value " + sci(value));
  o.require(center <= 1e-3, "planted centers " + sci(center));
  return o;
}

Outcome qmatrix_audit() {
  Outcome o;
  const Vec6 ev = q_spectrum();
  const double r2 = std::sqrt(2.0);
  Vec6 expect;
  expect << 0, 0, 2 * (2 - r2), 2 * (2 + r2), 10, 10;
  const double gap = (ev - expect).cwiseAbs().maxCoeff();
  Sampler s(1, 7);
  double form = 0.0;
  for (int k = 0; k < 100; ++k) {
    BlockVector v;
    for (auto& b : v) b = s.vec4();
    form = std::max(form, quadratic_form_audit(v));
  }
  o.require(gap <= 1e-12, "spectrum " + sci(gap));
  o.require(form <= 1e-12, "quadratic form " + sci(form));
  return o;
}

Outcome transforms() {
  Outcome o;
  Sampler s(1, 8);
  double sphere = 0.0, group = 0.0, invol = 0.0, kel = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const SpherePoint sp = s.sphere();
    const SpherePoint back = cayley_inverse(cayley_forward(sp));
    sphere = std::max(sphere, std::sqrt((back.q() - sp.q()).norm2() + (back.p() - sp.p()).norm2()));
    const GroupPoint g = s.point(3.0);
    const double scale = std::max(1.0, dist(g, GroupPoint{}));
    group = std::max(group, dist(cayley_forward(cayley_inverse(g)), g) / scale);
    invol = std::max(invol, dist(sigma(sigma(g)), g) / scale);
  }
  const ScalarField k1 = kelvin(ubar_field());
  for (int k = 0; k < 200; ++k) {
    const GroupPoint p = s.point(3.0);
    if (dist(p, GroupPoint{}) < 0.1) continue;
    kel = std::max(kel, rel_pde(k1, p));
  }
  o.require(std::max(sphere, group) <= 1e-12, "Cayley roundtrip " + sci(std::max(sphere, group)));
  o.require(invol <= 1e-12, "sigma^2 " + sci(invol));
  o.require(kel <= 1e-8, "Kelvin PDE " + sci(kel));
  return o;
}

Outcome frame_integrity() {
  Outcome o;
  Sampler s(1, 9);
  double comm = 0.0;
  for (int k = 0; k < 100; ++k) {
    const GroupPoint p = s.point(3.0);
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) comm = std::max(comm, commutator_audit(a, b, p));
  }
  const auto& cs = complex_structures();
  const ScalarField u = ubar_field();
  const std::vector<ScalarField> fields = {u, v_field(), bubble_denominator_field(), h_family({3.0, 0.4, s.point(1.0)}),
                                           scale_field(bubble_denominator_field(), 1.0 / 64.0), q_norm2_field(),
                                           omega_norm2_field(), coordinate_field(5), constant_field(2.0),
                                           translate_field(u, s.point(1.0)), dilate_field(u, 1.7), kelvin(u)};
  double anti = 0.0;
  for (const auto& f : fields)
    for (int k = 0; k < 20; ++k) {
      const HorizontalJet j = horizontal_jet(f, s.point(2.0));
      Mat4 r = 0.5 * (j.hessian - j.hessian.transpose());
      for (int t = 0; t < 3; ++t) r += j.vertical(t) * cs.omega(t);
      anti = std::max(anti, r.cwiseAbs().maxCoeff() / std::max(1.0, j.hessian.cwiseAbs().maxCoeff()));
    }
  o.require(comm <= 1e-13, "commutators " + sci(comm));
  o.require(anti <= 1e-10, "Hessian identity " + sci(anti));
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "extremal PDE residual", 5.0, extremal_pde},
      {2, "qc-Einstein family certification", 5.0, family_certification},
      {3, "n=1 collapse of U", 0.0, collapse},
      {4, "deformed scalar curvature", 0.0, scalar_curvature},
      {5, "best-constant integral", 0.0, best_constant},
      {6, "quotient extremality", 60.0, quotient_extremality},
      {7, "Q-matrix audit", 0.0, qmatrix_audit},
      {8, "transforms", 0.0, transforms},
      {9, "frame integrity", 0.0, frame_integrity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0.0) o.require(secs < c.budget_seconds, "runtime < " + std::to_string(static_cast<int>(c.budget_seconds)) + " s");
    failures += !o.pass;
    std::printf("%s  criterion %d: %s (%.2f s) -- %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
