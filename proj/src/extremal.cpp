#include "qcy/extremal.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qcy/cayley.hpp"
#include "qcy/errors.hpp"
#include "qcy/frame.hpp"

namespace qcy {

namespace {

Jet2 bubble_jet(const GroupPoint& p) {
  const auto c = p.coords();
  const double s = p.q.norm2();
  Jet2 r((1.0 + s) * (1.0 + s) + p.omega.norm2());
  for (int a = 0; a < 4; ++a) {
    r.grad[a] = 4.0 * (1.0 + s) * c[a];
    for (int b = a; b < 4; ++b) r.hess(a, b) = 8.0 * c[a] * c[b] + (a == b ? 4.0 * (1.0 + s) : 0.0);
  }
  for (int m = 4; m < kDim; ++m) {
    r.grad[m] = 2.0 * c[m];
    r.hess(m, m) = 2.0;
  }
  return r;
}

Jet1 bubble_grad(const GroupPoint& p) {
  const auto c = p.coords();
  const double s = p.q.norm2();
  Jet1 r;
  r.value = (1.0 + s) * (1.0 + s) + p.omega.norm2();
  for (int a = 0; a < 4; ++a) r.grad(a) = 4.0 * (1.0 + s) * c[a];
  for (int m = 4; m < kDim; ++m) r.grad(m) = 2.0 * c[m];
  return r;
}

// amplitude * G^-2, radial about the identity
ScalarField bubble_power(std::string tag, double amplitude) {
  return ScalarField(
      std::move(tag),
      [amplitude](const GroupPoint& p) {
        const Jet2 g = bubble_jet(p);
        const double inv = 1.0 / g.value;
        const double inv2 = inv * inv;
        return chain(g, amplitude * inv2, -2.0 * amplitude * inv2 * inv, 6.0 * amplitude * inv2 * inv2);
      },
      {},
      [amplitude](const GroupPoint& p) {
        Jet1 g = bubble_grad(p);
        const double inv = 1.0 / g.value;
        return Jet1{amplitude * inv * inv, (-2.0 * amplitude * inv * inv * inv) * g.grad};
      },
      BiradialChart{});
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

ScalarField bubble_denominator_field() {
  return ScalarField("G", bubble_jet, {}, bubble_grad, BiradialChart{});
}

ScalarField h_family(const FamilyParams& params) {
  if (!(params.c > 0.0) || !(params.nu > 0.0)) throw DomainError("h_family: c and nu must be positive");
  const double lambda = std::sqrt(params.nu);
  const GroupPoint center = params.center;
  const Mat7 jac = dilation_jacobian(lambda) * left_translation_jacobian(center);
  const BiradialChart chart{group_inv(center), 1.0 / lambda};
  return compose_affine(
      bubble_denominator_field(), "h[c=" + fmt(params.c) + ",nu=" + fmt(params.nu) + "]",
      [lambda, center](const GroupPoint& p) { return dilation(lambda, group_mul(center, p)); }, jac, params.c,
      chart);
}

ScalarField ubar_field() { return bubble_power("ubar", 1024.0); }

double v_amplitude() { return std::pow(2.0, 11) * std::sqrt(3.0) / std::pow(std::numbers::pi, 0.6); }

ScalarField v_field() { return bubble_power("v", v_amplitude()); }

double pde_residual(const ScalarField& u, const GroupPoint& p) {
  const HorizontalJet j = horizontal_jet(u, p);
  if (j.value < 0.0) throw DomainError("pde_residual: negative value under the 3/2 power");
  return j.hessian.trace() + std::pow(j.value, 1.5);
}

ScalarField translate_field(const ScalarField& u, const GroupPoint& g0) {
  std::optional<BiradialChart> chart;
  if (u.chart()) chart = BiradialChart{group_mul(group_inv(g0), u.chart()->center), u.chart()->scale};
  return compose_affine(
      u, "translate(" + u.tag() + ")", [g0](const GroupPoint& p) { return group_mul(g0, p); },
      left_translation_jacobian(g0), 1.0, chart);
}

ScalarField dilate_field(const ScalarField& u, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("dilate_field: lambda must be positive");
  std::optional<BiradialChart> chart;
  if (u.chart()) chart = BiradialChart{dilation(1.0 / lambda, u.chart()->center), u.chart()->scale / lambda};
  const double l2 = lambda * lambda;
  return compose_affine(
      u, "dilate(" + u.tag() + "," + fmt(lambda) + ")", [lambda](const GroupPoint& p) { return dilation(lambda, p); },
      dilation_jacobian(lambda), l2 * l2, chart);
}

ScalarField kelvin(const ScalarField& u) {
  return ScalarField("K(" + u.tag() + ")", [u](const GroupPoint& p) {
    const std::array<Jet2, kDim> s = sigma_jets(p);
    const GroupPoint image = sigma(p);
    const Jet2 inner = compose(u.eval_jet(image), std::span<const Jet2, kDim>(s));
    const auto x = seed_coordinates(p.coords());
    Jet2 q2(0.0), w2(0.0);
    for (int a = 0; a < 4; ++a) q2 += x[a] * x[a];
    for (int m = 4; m < kDim; ++m) w2 += x[m] * x[m];
    const Jet2 weight = q2 * q2 + w2;
    return inner / (weight * weight);
  });
}

}  // namespace qcy
