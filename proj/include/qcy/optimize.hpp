#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qcy/extremal.hpp"
#include "qcy/quadrature.hpp"

namespace qcy {

struct NelderMeadOptions {
  int max_iterations = 5000;
  /// Stop once the simplex size (mean vertex distance to the centroid) drops below this.
  double size_tol = 1e-7;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Minimizes f from x0 with an initial simplex of the given step sizes.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                             std::vector<double> step, const NelderMeadOptions& options = {});

/// A point of the search space: dilation parameter log(nu) and a group translation.
struct SearchPoint {
  double log_nu = 0.0;
  GroupPoint center{};
};

struct MinimizeOptions {
  int max_iterations = 4000;
  int restarts = 3;
  double size_tol = 1e-6;
  double initial_step = 0.2;
  /// Composite Gauss-Legendre rule for the trace integrals.
  int panels = 1;
  int points_per_panel = 30;
  std::uint64_t seed = 0;
};

struct MinimizeResult {
  SearchPoint optimum;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  int restarts = 0;
  bool converged = false;
};

/// The field dilate(translate(target, center), sqrt(nu)).
ScalarField search_field(const ScalarField& target, const SearchPoint& x);

/// Objective of the search: the mean over the three imaginary axes of the
/// bi-radial trace quotient of search_field(target, x). It is bounded below by
/// the extremal quotient and attains it where the searched field is a
/// centered extremal.
double quotient_objective(const ScalarField& target, const SearchPoint& x, const std::vector<BiradialNode>& rule);

/// Nelder-Mead over (log nu in [-4, 4], center in |coords| <= 5), with up to
/// `restarts` jittered restarts from the best point. Iterates are projected
/// into the box. Throws DomainError if `init` lies outside it.
MinimizeResult minimize_quotient(const SearchPoint& init, const ScalarField& target = ubar_field(),
                                 const MinimizeOptions& options = {});

}  // namespace qcy
