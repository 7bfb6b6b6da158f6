#include "qcy/field.hpp"

#include <algorithm>
#include <cmath>

namespace qcy {

namespace {

Jet2 from_matrices(double value, const Vec7& g, const Mat7& h) {
  Jet2 r(value);
  for (int i = 0; i < kDim; ++i) {
    r.grad[i] = g(i);
    for (int j = i; j < kDim; ++j) r.hess(i, j) = h(i, j);
  }
  return r;
}

}  // namespace

Jet2 compose(const Jet2& outer, std::span<const Jet2, kDim> inner) {
  Mat7 jac;
  for (int c = 0; c < kDim; ++c)
    for (int i = 0; i < kDim; ++i) jac(c, i) = inner[c].grad[i];
  const Mat7 h_outer = outer.hessian();
  Mat7 h = jac.transpose() * h_outer * jac;
  for (int c = 0; c < kDim; ++c) h += outer.grad[c] * inner[c].hessian();
  return from_matrices(outer.value, jac.transpose() * outer.gradient(), h);
}

Jet2 compose_linear(const Jet2& outer, const Mat7& jacobian) {
  return from_matrices(outer.value, jacobian.transpose() * outer.gradient(),
                       jacobian.transpose() * outer.hessian() * jacobian);
}

double BiradialChart::jacobian() const { return std::pow(scale, kHomogeneousDim); }

ScalarField::ScalarField(std::string tag, JetFn jet, DomainFn domain, GradFn grad, std::optional<BiradialChart> chart)
    : impl_(std::make_shared<const Impl>(Impl{std::move(tag), std::move(jet), std::move(domain), std::move(grad), chart})) {}

Jet2 ScalarField::eval_jet(const GroupPoint& p) const {
  if (!in_domain(p)) throw DomainError("field '" + tag() + "' evaluated outside its domain");
  return impl_->jet(p);
}

Jet1 ScalarField::eval_grad(const GroupPoint& p) const {
  if (!in_domain(p)) throw DomainError("field '" + tag() + "' evaluated outside its domain");
  if (impl_->grad) return impl_->grad(p);
  const Jet2 j = impl_->jet(p);
  return {j.value, j.gradient()};
}

double ScalarField::value(const GroupPoint& p) const { return eval_grad(p).value; }

ScalarField ScalarField::with_chart(std::optional<BiradialChart> chart) const {
  return ScalarField(impl_->tag, impl_->jet, impl_->domain, impl_->grad, chart);
}

ScalarField constant_field(double c) {
  return ScalarField(
      "const(" + std::to_string(c) + ")", [c](const GroupPoint&) { return Jet2(c); }, {},
      [c](const GroupPoint&) { return Jet1{c, Vec7::Zero()}; }, BiradialChart{});
}

ScalarField coordinate_field(int i) {
  if (i < 0 || i >= kDim) throw DomainError("coordinate_field: index out of range");
  return ScalarField("coord" + std::to_string(i),
                     [i](const GroupPoint& p) { return Jet2::variable(p.coords()[static_cast<std::size_t>(i)], i); });
}

ScalarField q_norm2_field() {
  return ScalarField(
      "|q|^2",
      [](const GroupPoint& p) {
        const auto c = p.coords();
        Jet2 r(p.q.norm2());
        for (int a = 0; a < 4; ++a) {
          r.grad[a] = 2.0 * c[a];
          r.hess(a, a) = 2.0;
        }
        return r;
      },
      {}, {}, BiradialChart{});
}

ScalarField omega_norm2_field() {
  return ScalarField(
      "|w|^2",
      [](const GroupPoint& p) {
        const auto c = p.coords();
        Jet2 r(p.omega.norm2());
        for (int m = 4; m < kDim; ++m) {
          r.grad[m] = 2.0 * c[m];
          r.hess(m, m) = 2.0;
        }
        return r;
      },
      {}, {}, BiradialChart{});
}

ScalarField scale_field(const ScalarField& u, double a) {
  return ScalarField(
      std::to_string(a) + "*" + u.tag(), [u, a](const GroupPoint& p) { return a * u.eval_jet(p); },
      [u](const GroupPoint& p) { return u.in_domain(p); },
      [u, a](const GroupPoint& p) {
        Jet1 j = u.eval_grad(p);
        j.value *= a;
        j.grad *= a;
        return j;
      },
      u.chart());
}

ScalarField compose_affine(const ScalarField& u, std::string tag, std::function<GroupPoint(const GroupPoint&)> map,
                           const Mat7& jacobian, double amplitude, std::optional<BiradialChart> chart) {
  const Mat7 jt = jacobian.transpose();
  return ScalarField(
      std::move(tag),
      [u, map, jacobian, amplitude](const GroupPoint& p) {
        return amplitude * compose_linear(u.eval_jet(map(p)), jacobian);
      },
      [u, map](const GroupPoint& p) { return u.in_domain(map(p)); },
      [u, map, jt, amplitude](const GroupPoint& p) {
        const Jet1 inner = u.eval_grad(map(p));
        return Jet1{amplitude * inner.value, amplitude * (jt * inner.grad)};
      },
      chart);
}

double finite_diff_audit(const ScalarField& f, const GroupPoint& p, double step) {
  if (!(step > 0.0)) throw DomainError("finite_diff_audit: step must be positive");
  const Jet2 jet = f.eval_jet(p);
  const Coords base = p.coords();
  auto at = [&](int i, double di, int j, double dj) {
    Coords c = base;
    c[static_cast<std::size_t>(i)] += di;
    c[static_cast<std::size_t>(j)] += dj;
    return f.value(GroupPoint::from_coords(c));
  };
  const double f0 = jet.value;
  const double h = step;
  double worst = 0.0;
  for (int i = 0; i < kDim; ++i) {
    const double fp = at(i, h, i, 0.0);
    const double fm = at(i, -h, i, 0.0);
    worst = std::max(worst, std::abs((fp - fm) / (2.0 * h) - jet.grad[i]));
    worst = std::max(worst, std::abs((fp - 2.0 * f0 + fm) / (h * h) - jet.hess(i, i)));
    for (int j = i + 1; j < kDim; ++j) {
      const double mixed = (at(i, h, j, h) - at(i, h, j, -h) - at(i, -h, j, h) + at(i, -h, j, -h)) / (4.0 * h * h);
      worst = std::max(worst, std::abs(mixed - jet.hess(i, j)));
    }
  }
  return worst;
}

}  // namespace qcy
