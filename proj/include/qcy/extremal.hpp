#pragma once

#include "qcy/field.hpp"

namespace qcy {

/// Parameters of h = c [(1 + nu |q|^2)^2 + nu^2 |w|^2], left-translated by center.
struct FamilyParams {
  double c = 1.0;
  double nu = 1.0;
  GroupPoint center{};
};

/// (1 + |q|^2)^2 + |w|^2 with closed-form jet.
ScalarField bubble_denominator_field();

/// h_family(params)(p) = c G(delta_sqrt(nu)(center o p)), G the bubble denominator.
/// Throws DomainError unless c > 0 and nu > 0.
ScalarField h_family(const FamilyParams& params);

/// 2^10 G^-2.
ScalarField ubar_field();

/// Amplitude of the extremal v = v_amplitude() G^-2.
double v_amplitude();
ScalarField v_field();

/// sub-Laplacian(u) + u^{3/2}. Throws DomainError if u(p) < 0.
double pde_residual(const ScalarField& u, const GroupPoint& p);

/// p -> u(g0 o p).
ScalarField translate_field(const ScalarField& u, const GroupPoint& g0);

/// p -> lambda^4 u(delta_lambda p). Throws DomainError for lambda <= 0.
ScalarField dilate_field(const ScalarField& u, double lambda);

/// (Ku)(g) = (|q|^4 + |w|^2)^-2 u(sigma(g)); evaluation at the identity
/// throws SingularityError.
ScalarField kelvin(const ScalarField& u);

}  // namespace qcy
