#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcy/field.hpp"

namespace qcy {

/// A function f(r, rho) of r = |q| and rho = |w|, standing for the integrand
/// (q, w) -> f(|q|, |w|). `decay` is the exponent d in |f| <= C N^-d with
/// N = (|q|^4 + |w|^2)^(1/4) the homogeneous norm; integrability over the
/// group needs d > 10.
struct BiRadialIntegrand {
  std::function<double(double, double)> f;
  double decay = 0.0;
};

struct ConvergenceRow {
  int level = 0;
  double estimate = 0.0;
  double error = 0.0;
  std::size_t cells = 0;
};

struct IntegrationResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  std::vector<ConvergenceRow> table;
};

struct QuadratureOptions {
  double abs_tol = 0.0;
  int max_levels = 60;
  std::size_t max_cells = 100000;
  unsigned threads = 0;
};

/// Integral over G(H) with dH = (2 pi^2 r^3 dr)(4 pi rho^2 drho), after the
/// substitution r = t/(1-t), rho = s/(1-s), by adaptive tensor
/// Gauss-Kronrod (7/15) cells on the unit square. Stops once the error
/// estimate is below max(tol |value|, abs_tol); otherwise throws
/// AccuracyError carrying the partial value.
IntegrationResult integrate_biradial(const BiRadialIntegrand& f, double tol, const QuadratureOptions& options = {});

/// CSV with columns level,estimate,error,cells.
void write_convergence_csv(std::ostream& os, const IntegrationResult& result);

/// Nodes (r, rho) and weights, Haar measure included, of a fixed composite
/// Gauss-Legendre product rule on the compactified square.
struct BiradialNode {
  double r, rho, weight;
};
std::vector<BiradialNode> fixed_biradial_rule(int panels, int points_per_panel);

struct MCResult {
  double value = 0.0;
  double stderr_ = 0.0;
  std::size_t samples = 0;
  /// Set when the standard error fails to shrink between half and full sample.
  bool warning = false;
};

/// Importance-sampled Monte Carlo over G(H). Points are drawn from the
/// density proportional to [(1+|q|^2)^2 + |w|^2]^-k with k = decay/4 - 1,
/// which keeps f / density bounded for integrands of the declared decay.
/// Needs decay > 14 and n >= 1000. Deterministic for a given seed and any
/// thread count.
MCResult integrate_mc(const std::function<double(const GroupPoint&)>& f, double decay, std::size_t n,
                      std::uint64_t seed = 0, unsigned threads = 0);

struct QuotientOptions {
  double tol = 1e-10;
  /// Decay of |grad u|^2 and of |u|^{5/2} for fields without a chart.
  double gradient_decay = 18.0;
  double power_decay = 20.0;
  std::size_t mc_samples = 200000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct QuotientReport {
  double numerator = 0.0;       // int |grad u|^2 dH
  double power_integral = 0.0;  // int |u|^{5/2} dH
  double denominator = 0.0;     // (int |u|^{5/2} dH)^{4/5}
  double quotient = 0.0;
  double error = 0.0;           // absolute error estimate of the quotient
  std::string method;
};

/// Folland-Stein quotient int |grad u|^2 / (int |u|^{5/2})^{4/5}. Fields with a
/// bi-radial chart are integrated on the reduced quadrant at the actual field
/// values; others fall back to Monte Carlo.
QuotientReport fs_quotient(const ScalarField& u, const QuotientOptions& options = {});

/// |grad_H u|^2 at p.
double horizontal_gradient_norm2(const ScalarField& u, const GroupPoint& p);

/// Quotient of the bi-radial extension of the trace f(r, rho) = w(r, rho e),
/// e the unit imaginary axis with index `axis`, using a fixed rule.
double biradial_trace_quotient(const ScalarField& w, int axis, const std::vector<BiradialNode>& rule);

}  // namespace qcy
