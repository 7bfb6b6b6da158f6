#include "qcy/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "qcy/errors.hpp"
#include "qcy/frame.hpp"
#include "qcy/parallel.hpp"

namespace qcy {

namespace {

constexpr double kPi = std::numbers::pi;
// 2 pi^2 (area of S^3) times 4 pi (area of S^2)
constexpr double kSphereAreas = 8.0 * kPi * kPi * kPi;

struct Rule1D {
  std::array<double, 15> x{}, wk{}, wg{};
};

const Rule1D& kronrod15() {
  static const Rule1D rule = [] {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    const auto xk = gauss_kronrod<double, 15>::abscissa();
    const auto wk = gauss_kronrod<double, 15>::weights();
    const auto wg = gauss<double, 7>::weights();
    Rule1D r;
    for (int i = 0; i < 8; ++i) {
      const double g = (i % 2 == 0) ? wg[static_cast<std::size_t>(i / 2)] : 0.0;
      r.x[static_cast<std::size_t>(7 + i)] = xk[static_cast<std::size_t>(i)];
      r.x[static_cast<std::size_t>(7 - i)] = -xk[static_cast<std::size_t>(i)];
      r.wk[static_cast<std::size_t>(7 + i)] = r.wk[static_cast<std::size_t>(7 - i)] = wk[static_cast<std::size_t>(i)];
      r.wg[static_cast<std::size_t>(7 + i)] = r.wg[static_cast<std::size_t>(7 - i)] = g;
    }
    return r;
  }();
  return rule;
}

struct Cell {
  double t0, t1, s0, s1;
  double kronrod = 0.0, error = 0.0;
};

double compact_integrand(const BiRadialIntegrand& f, double t, double s) {
  const double ot = 1.0 - t, os = 1.0 - s;
  const double r = t / ot, rho = s / os;
  const double v = f.f(r, rho);
  if (!std::isfinite(v)) throw DomainError("integrate_biradial: integrand is not finite");
  if (v == 0.0) return 0.0;
  return kSphereAreas * r * r * r * rho * rho * v / (ot * ot * os * os);
}

void evaluate_cell(const BiRadialIntegrand& f, Cell& c) {
  const Rule1D& rule = kronrod15();
  const double ht = 0.5 * (c.t1 - c.t0), mt = 0.5 * (c.t1 + c.t0);
  const double hs = 0.5 * (c.s1 - c.s0), ms = 0.5 * (c.s1 + c.s0);
  double k = 0.0, g = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double t = mt + ht * rule.x[static_cast<std::size_t>(i)];
    double ki = 0.0, gi = 0.0;
    for (int j = 0; j < 15; ++j) {
      const double v = compact_integrand(f, t, ms + hs * rule.x[static_cast<std::size_t>(j)]);
      ki += rule.wk[static_cast<std::size_t>(j)] * v;
      gi += rule.wg[static_cast<std::size_t>(j)] * v;
    }
    k += rule.wk[static_cast<std::size_t>(i)] * ki;
    g += rule.wg[static_cast<std::size_t>(i)] * gi;
  }
  c.kronrod = ht * hs * k;
  c.error = std::abs(ht * hs * (k - g));
}

template <class Rule>
void append_panels(std::vector<double>& x, std::vector<double>& w, int panels) {
  const auto a = Rule::abscissa();
  const auto wt = Rule::weights();
  for (int p = 0; p < panels; ++p) {
    const double lo = static_cast<double>(p) / panels, hi = static_cast<double>(p + 1) / panels;
    const double h = 0.5 * (hi - lo), m = 0.5 * (hi + lo);
    for (std::size_t i = 0; i < a.size(); ++i) {
      x.push_back(m + h * a[i]);
      w.push_back(h * wt[i]);
      if (a[i] != 0.0) {
        x.push_back(m - h * a[i]);
        w.push_back(h * wt[i]);
      }
    }
  }
}

}  // namespace

IntegrationResult integrate_biradial(const BiRadialIntegrand& f, double tol, const QuadratureOptions& options) {
  if (!f.f) throw DomainError("integrate_biradial: empty integrand");
  if (!(f.decay > kHomogeneousDim)) throw DomainError("integrate_biradial: declared decay must exceed 10");
  if (!(tol > 0.0)) throw DomainError("integrate_biradial: tolerance must be positive");

  constexpr int kInitial = 4;
  std::vector<Cell> cells;
  for (int i = 0; i < kInitial; ++i)
    for (int j = 0; j < kInitial; ++j)
      cells.push_back({double(i) / kInitial, double(i + 1) / kInitial, double(j) / kInitial, double(j + 1) / kInitial});
  parallel_for(cells.size(), options.threads, [&](std::size_t i) { evaluate_cell(f, cells[i]); });

  IntegrationResult result;
  result.evaluations = cells.size() * 225;
  for (int level = 0;; ++level) {
    std::vector<double> values(cells.size()), errors(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      values[i] = cells[i].kronrod;
      errors[i] = cells[i].error;
    }
    result.value = pairwise_sum(values);
    result.error = pairwise_sum(errors);
    result.table.push_back({level, result.value, result.error, cells.size()});
    if (result.error <= std::max(options.abs_tol, tol * std::abs(result.value))) return result;
    if (level >= options.max_levels || cells.size() >= options.max_cells)
      throw AccuracyError("integrate_biradial: tolerance not reached", result.value, result.error);

    // split the worst cells until they account for half of the error
    std::vector<std::size_t> order(cells.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return cells[a].error > cells[b].error; });
    std::vector<bool> split(cells.size(), false);
    double acc = 0.0;
    for (std::size_t idx : order) {
      split[idx] = true;
      acc += cells[idx].error;
      if (acc >= 0.5 * result.error) break;
    }
    std::vector<Cell> next, fresh;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Cell& c = cells[i];
      if (!split[i]) {
        next.push_back(c);
        continue;
      }
      const double tm = 0.5 * (c.t0 + c.t1), sm = 0.5 * (c.s0 + c.s1);
      fresh.push_back({c.t0, tm, c.s0, sm});
      fresh.push_back({c.t0, tm, sm, c.s1});
      fresh.push_back({tm, c.t1, c.s0, sm});
      fresh.push_back({tm, c.t1, sm, c.s1});
    }
    parallel_for(fresh.size(), options.threads, [&](std::size_t i) { evaluate_cell(f, fresh[i]); });
    result.evaluations += fresh.size() * 225;
    next.insert(next.end(), fresh.begin(), fresh.end());
    cells = std::move(next);
  }
}

void write_convergence_csv(std::ostream& os, const IntegrationResult& result) {
  os << "level,estimate,error,cells\n";
  const auto old = os.precision(17);
  for (const auto& row : result.table) os << row.level << ',' << row.estimate << ',' << row.error << ',' << row.cells << '\n';
  os.precision(old);
}

std::vector<BiradialNode> fixed_biradial_rule(int panels, int points_per_panel) {
  using boost::math::quadrature::gauss;
  if (panels < 1) throw DomainError("fixed_biradial_rule: need at least one panel");
  std::vector<double> x, w;
  switch (points_per_panel) {
    case 7: append_panels<gauss<double, 7>>(x, w, panels); break;
    case 10: append_panels<gauss<double, 10>>(x, w, panels); break;
    case 15: append_panels<gauss<double, 15>>(x, w, panels); break;
    case 20: append_panels<gauss<double, 20>>(x, w, panels); break;
    case 25: append_panels<gauss<double, 25>>(x, w, panels); break;
    case 30: append_panels<gauss<double, 30>>(x, w, panels); break;
    default: throw DomainError("fixed_biradial_rule: points per panel must be 7, 10, 15, 20, 25 or 30");
  }
  std::vector<BiradialNode> nodes;
  nodes.reserve(x.size() * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double ot = 1.0 - x[i], r = x[i] / ot;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double os = 1.0 - x[j], rho = x[j] / os;
      nodes.push_back({r, rho, kSphereAreas * r * r * r * rho * rho * w[i] * w[j] / (ot * ot * os * os)});
    }
  }
  return nodes;
}

MCResult integrate_mc(const std::function<double(const GroupPoint&)>& f, double decay, std::size_t n,
                      std::uint64_t seed, unsigned threads) {
  if (n < 1000) throw DomainError("integrate_mc: at least 1000 samples are required");
  if (!(decay > 14.0)) throw DomainError("integrate_mc: declared decay must exceed 14");
  const double k = decay / 4.0 - 1.0;
  const double z = kSphereAreas * 0.5 * boost::math::beta(1.5, k - 1.5) * 0.5 * boost::math::beta(2.0, 2.0 * k - 5.0);

  constexpr std::size_t kBatch = 8192;
  const std::size_t batches = (n + kBatch - 1) / kBatch;
  std::vector<double> w(n);
  parallel_for(batches, threads, [&](std::size_t b) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(b)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    std::gamma_distribution<double> g_two(2.0), g_r(2.0 * k - 5.0), g_half(1.5), g_rho(k - 1.5);
    const std::size_t end = std::min(n, (b + 1) * kBatch);
    for (std::size_t i = b * kBatch; i < end; ++i) {
      // u / (1 + u) ~ Beta(2, 2k - 5) with u = r^2
      const double a1 = g_two(rng), b1 = g_r(rng);
      const double r2 = a1 / b1;
      // t^2 / (1 + t^2) ~ Beta(3/2, k - 3/2) with rho = (1 + r^2) t
      const double a2 = g_half(rng), b2 = g_rho(rng);
      const double rho = (1.0 + r2) * std::sqrt(a2 / b2);
      std::array<double, 4> dq;
      std::array<double, 3> dw;
      double nq = 0.0, nw = 0.0;
      for (auto& v : dq) {
        v = normal(rng);
        nq += v * v;
      }
      for (auto& v : dw) {
        v = normal(rng);
        nw += v * v;
      }
      const double sq = std::sqrt(r2 / nq), sw = rho / std::sqrt(nw);
      const GroupPoint p{{dq[0] * sq, dq[1] * sq, dq[2] * sq, dq[3] * sq}, {dw[0] * sw, dw[1] * sw, dw[2] * sw}};
      const double density = std::pow((1.0 + r2) * (1.0 + r2) + rho * rho, -k) / z;
      w[i] = f(p) / density;
    }
  });

  auto moments = [&](std::size_t m) {
    std::vector<double> sq(m);
    for (std::size_t i = 0; i < m; ++i) sq[i] = w[i] * w[i];
    const double mean = pairwise_sum(std::span<const double>(w.data(), m)) / double(m);
    const double var = std::max(0.0, pairwise_sum(sq) / double(m) - mean * mean);
    return std::pair{mean, std::sqrt(var / double(m - 1))};
  };
  const auto [mean, se] = moments(n);
  const auto half = moments(n / 2);
  MCResult out{mean, se, n, false};
  if (half.second > 0.0 && se / half.second > 0.9) out.warning = true;
  return out;
}

double horizontal_gradient_norm2(const ScalarField& u, const GroupPoint& p) {
  return horizontal_gradient(u, p).squaredNorm();
}

QuotientReport fs_quotient(const ScalarField& u, const QuotientOptions& options) {
  QuotientReport rep;
  double num_err = 0.0, pow_err = 0.0;
  if (const auto& chart = u.chart()) {
    const BiradialChart c = *chart;
    const double jac = c.jacobian();
    auto at = [c](double r, double rho) { return c.apply(GroupPoint{{r, 0.0, 0.0, 0.0}, {rho, 0.0, 0.0}}); };
    QuadratureOptions qo;
    qo.threads = options.threads;
    const auto num = integrate_biradial(
        {[&](double r, double rho) { return jac * horizontal_gradient_norm2(u, at(r, rho)); }, options.gradient_decay},
        options.tol, qo);
    const auto pw = integrate_biradial(
        {[&](double r, double rho) { return jac * std::pow(std::abs(u.value(at(r, rho))), 2.5); }, options.power_decay},
        options.tol, qo);
    rep.numerator = num.value;
    rep.power_integral = pw.value;
    num_err = num.error;
    pow_err = pw.error;
    rep.method = "biradial";
  } else {
    const auto num = integrate_mc([&](const GroupPoint& p) { return horizontal_gradient_norm2(u, p); },
                                  options.gradient_decay, options.mc_samples, options.seed, options.threads);
    const auto pw = integrate_mc([&](const GroupPoint& p) { return std::pow(std::abs(u.value(p)), 2.5); },
                                 options.power_decay, options.mc_samples, options.seed, options.threads);
    rep.numerator = num.value;
    rep.power_integral = pw.value;
    num_err = num.stderr_;
    pow_err = pw.stderr_;
    rep.method = "monte-carlo";
  }
  if (!(rep.power_integral > 0.0)) throw DomainError("fs_quotient: field vanishes identically");
  rep.denominator = std::pow(rep.power_integral, 0.8);
  rep.quotient = rep.numerator / rep.denominator;
  rep.error = rep.quotient * (num_err / rep.numerator + 0.8 * pow_err / rep.power_integral);
  return rep;
}

double biradial_trace_quotient(const ScalarField& w, int axis, const std::vector<BiradialNode>& rule) {
  if (axis < 0 || axis > 2) throw DomainError("biradial_trace_quotient: axis must be 0, 1 or 2");
  double num = 0.0, pw = 0.0;
  for (const auto& n : rule) {
    GroupPoint p{{n.r, 0.0, 0.0, 0.0}, {}};
    (axis == 0 ? p.omega.x : axis == 1 ? p.omega.y : p.omega.z) = n.rho;
    const Jet1 j = w.eval_grad(p);
    const double fr = j.grad(0), frho = j.grad(4 + axis);
    num += n.weight * (fr * fr + 4.0 * n.r * n.r * frho * frho);
    pw += n.weight * std::pow(std::abs(j.value), 2.5);
  }
  if (!(pw > 0.0)) throw DomainError("biradial_trace_quotient: trace vanishes identically");
  return num / std::pow(pw, 0.8);
}

}  // namespace qcy
