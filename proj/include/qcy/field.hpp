#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "qcy/group.hpp"
#include "qcy/jet.hpp"

namespace qcy {

/// A map psi(p) = center o delta_scale(p) under which a field becomes
/// bi-radial: (u o psi)(q, w) depends only on (|q|, |w|).
///
/// Declared by fields built from the bubble families and carried through
/// translations and dilations; quadrature uses it to reduce 7-D integrals to
/// the (r, rho) quadrant. Haar measure transforms by scale^10 under psi.
struct BiradialChart {
  GroupPoint center{};
  double scale = 1.0;

  GroupPoint apply(const GroupPoint& p) const { return group_mul(center, dilation(scale, p)); }
  double jacobian() const;
};

/// A scalar field on G(H) that evaluates to exact second-order jets.
///
/// Fields are immutable values that share their evaluation closures, so
/// copying is cheap and concurrent evaluation is safe as long as the closures
/// are pure (every field built by this library is).
class ScalarField {
 public:
  using JetFn = std::function<Jet2(const GroupPoint&)>;
  using GradFn = std::function<Jet1(const GroupPoint&)>;
  using DomainFn = std::function<bool(const GroupPoint&)>;

  ScalarField(std::string tag, JetFn jet, DomainFn domain = {}, GradFn grad = {},
              std::optional<BiradialChart> chart = std::nullopt);

  /// Full jet at p. Throws DomainError outside the declared domain.
  Jet2 eval_jet(const GroupPoint& p) const;
  /// Value and gradient at p, through the cheap path when one was supplied.
  Jet1 eval_grad(const GroupPoint& p) const;
  double value(const GroupPoint& p) const;

  bool in_domain(const GroupPoint& p) const { return !impl_->domain || impl_->domain(p); }
  const std::string& tag() const { return impl_->tag; }
  const std::optional<BiradialChart>& chart() const { return impl_->chart; }
  bool has_fast_gradient() const { return static_cast<bool>(impl_->grad); }

  /// Same evaluation, different chart (or none).
  ScalarField with_chart(std::optional<BiradialChart> chart) const;

 private:
  struct Impl {
    std::string tag;
    JetFn jet;
    DomainFn domain;
    GradFn grad;
    std::optional<BiradialChart> chart;
  };
  std::shared_ptr<const Impl> impl_;
};

ScalarField constant_field(double c);

/// The coordinate function p -> p_i (i in 0..6, order t1 x1 y1 z1 x y z).
ScalarField coordinate_field(int i);

/// |q|^2.
ScalarField q_norm2_field();

/// |w|^2.
ScalarField omega_norm2_field();

/// a * u (amplitude scaling); keeps the chart of u.
ScalarField scale_field(const ScalarField& u, double a);

/// u o A for an affine map A(p) = jacobian * p + offset(p=0). Used for
/// translations and dilations, whose Jacobians are constant.
ScalarField compose_affine(const ScalarField& u, std::string tag, std::function<GroupPoint(const GroupPoint&)> map,
                           const Mat7& jacobian, double amplitude, std::optional<BiradialChart> chart);

/// Lift a generic function of 7 reals to a field by second-order forward
/// propagation. `g` is called with the seeded coordinate jets and must be
/// written generically, e.g. `[](const auto& x) { return exp(x[0]); }`.
template <class F>
ScalarField autodiff_lift(std::string tag, F g, ScalarField::DomainFn domain = {}) {
  auto jet = [g](const GroupPoint& p) -> Jet2 {
    const auto x = seed_coordinates(p.coords());
    return Jet2(g(x));
  };
  return ScalarField(std::move(tag), std::move(jet), std::move(domain));
}

/// Maximum absolute discrepancy between the field's gradient and Hessian and
/// central finite differences of its values with the given step.
double finite_diff_audit(const ScalarField& f, const GroupPoint& p, double step);

}  // namespace qcy
