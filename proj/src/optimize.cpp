#include "qcy/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "qcy/errors.hpp"

namespace qcy {

namespace {

constexpr double kLogNuBound = 4.0;
constexpr double kCenterBound = 5.0;

struct Trampoline {
  const std::function<double(std::span<const double>)>* f;
  std::size_t n;
};

double call(const gsl_vector* v, void* params) {
  const auto* t = static_cast<const Trampoline*>(params);
  std::vector<double> x(t->n);
  for (std::size_t i = 0; i < t->n; ++i) x[i] = gsl_vector_get(v, i);
  return (*t->f)(x);
}

SearchPoint unpack(std::span<const double> x) {
  SearchPoint p;
  p.log_nu = std::clamp(x[0], -kLogNuBound, kLogNuBound);
  Coords c;
  for (int i = 0; i < kDim; ++i) c[i] = std::clamp(x[static_cast<std::size_t>(i + 1)], -kCenterBound, kCenterBound);
  p.center = GroupPoint::from_coords(c);
  return p;
}

std::vector<double> pack(const SearchPoint& p) {
  std::vector<double> x{p.log_nu};
  for (double c : p.center.coords()) x.push_back(c);
  return x;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                             std::vector<double> step, const NelderMeadOptions& options) {
  const std::size_t n = x0.size();
  if (n == 0 || step.size() != n) throw DomainError("nelder_mead: dimension mismatch");
  Trampoline t{&f, n};
  gsl_multimin_function fn{&call, n, &t};
  gsl_vector* x = gsl_vector_alloc(n);
  gsl_vector* s = gsl_vector_alloc(n);
  for (std::size_t i = 0; i < n; ++i) {
    gsl_vector_set(x, i, x0[i]);
    gsl_vector_set(s, i, step[i]);
  }
  gsl_multimin_fminimizer* m = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
  gsl_multimin_fminimizer_set(m, &fn, x, s);
  NelderMeadResult r;
  for (r.iterations = 1; r.iterations <= options.max_iterations; ++r.iterations) {
    if (gsl_multimin_fminimizer_iterate(m) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m), options.size_tol) == GSL_SUCCESS) {
      r.converged = true;
      break;
    }
  }
  r.iterations = std::min(r.iterations, options.max_iterations);
  r.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.x[i] = gsl_vector_get(m->x, i);
  r.value = m->fval;
  gsl_multimin_fminimizer_free(m);
  gsl_vector_free(s);
  gsl_vector_free(x);
  return r;
}

ScalarField search_field(const ScalarField& target, const SearchPoint& x) {
  return dilate_field(translate_field(target, x.center), std::exp(0.5 * x.log_nu));
}

double quotient_objective(const ScalarField& target, const SearchPoint& x, const std::vector<BiradialNode>& rule) {
  const ScalarField w = search_field(target, x);
  double sum = 0.0;
  for (int axis = 0; axis < 3; ++axis) sum += biradial_trace_quotient(w, axis, rule);
  return sum / 3.0;
}

MinimizeResult minimize_quotient(const SearchPoint& init, const ScalarField& target, const MinimizeOptions& options) {
  if (std::abs(init.log_nu) > kLogNuBound) throw DomainError("minimize_quotient: log nu outside [-4, 4]");
  for (double c : init.center.coords())
    if (std::abs(c) > kCenterBound) throw DomainError("minimize_quotient: center outside |coords| <= 5");

  const auto rule = fixed_biradial_rule(options.panels, options.points_per_panel);
  int evaluations = 0;
  const std::function<double(std::span<const double>)> f = [&](std::span<const double> x) {
    ++evaluations;
    return quotient_objective(target, unpack(x), rule);
  };

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> jitter(0.5, 1.5);
  NelderMeadOptions nm{options.max_iterations, options.size_tol};
  std::vector<double> step(8, options.initial_step);
  MinimizeResult out;
  std::vector<double> best = pack(init);
  double best_value = f(best);
  for (int round = 0; round <= options.restarts; ++round) {
    const NelderMeadResult r = nelder_mead(f, best, step, nm);
    out.iterations += r.iterations;
    const double gain = best_value - r.value;
    if (r.value < best_value) {
      best = pack(unpack(r.x));
      best_value = r.value;
    }
    out.restarts = round;
    out.converged = r.converged;
    if (r.converged && round > 0 && gain <= 1e-12 * std::abs(best_value)) break;
    for (auto& s : step) s = options.initial_step * 0.1 * jitter(rng);
  }
  out.optimum = unpack(best);
  out.value = best_value;
  out.evaluations = evaluations;
  return out;
}

}  // namespace qcy
