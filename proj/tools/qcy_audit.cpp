// qcy-audit: runs the verification suites and writes structured reports.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qcy/quadrature.hpp"
#include "qcy/suites.hpp"

namespace {

constexpr int kUsage = 2;

const std::map<std::string, std::pair<std::string, std::string>> kCommands = {
    {"verify-frames", {"frames", "Frame commutators, complex structures, Hessian identity"}},
    {"verify-conformal", {"conformal", "Torsion, scalar curvature and divergence-formula checks"}},
    {"verify-extremal", {"extremal", "Yamabe residuals of the extremal and its family"}},
    {"verify-cayley", {"cayley", "Cayley transform, inversion and Kelvin transform"}},
    {"verify-quadrature", {"quadrature", "Quadrature, Monte Carlo and the Sobolev quotient"}},
    {"best-constant", {"best-constant", "Best-constant integral and reconciliation of printed constants"}},
    {"qmatrix", {"qmatrix", "Spectrum and quadratic form of the Q matrix"}},
    {"quotient-min", {"quotient", "Minimize the quotient over translations and dilations"}},
    {"all", {"all", "Every suite"}},
};

int write_convergence(const std::string& path) {
  const qcy::BiRadialIntegrand bubble{
      [](double r, double rho) { return std::pow((1.0 + r * r) * (1.0 + r * r) + rho * rho, -5.0); }, 20.0};
  const auto res = qcy::integrate_biradial(bubble, 1e-11);
  std::ofstream os(path);
  if (!os) {
    std::cerr << "qcy-audit: cannot open " << path << "\n";
    return kUsage;
  }
  qcy::write_convergence_csv(os, res);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical audit of the quaternionic Heisenberg group Yamabe problem"};
  app.require_subcommand(1);

  qcy::SuiteConfig config;
  std::string format = "text";
  std::string out;
  std::string convergence;
  std::size_t samples = 0;
  double tol = 0.0;

  for (const auto& [cmd, info] : kCommands) {
    auto* sub = app.add_subcommand(cmd, info.second);
    sub->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
    sub->add_option("--samples", samples, "Override per-check sample counts")->check(CLI::PositiveNumber);
    sub->add_option("--tol", tol, "Override every tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
    sub->add_option("--out", out, "Write the report to a file instead of stdout");
    sub->add_option("--threads", config.threads, "Worker threads for integration (0 = hardware)");
    sub->add_option("--mc-samples", config.mc_samples, "Monte Carlo sample count")->capture_default_str();
    sub->add_flag("--parallel", config.parallel, "Run the suites of 'all' concurrently");
    if (cmd == "quotient-min" || cmd == "all")
      sub->add_option("--starts", config.quotient_starts, "Number of minimizer starts")->capture_default_str();
    if (cmd == "best-constant" || cmd == "verify-quadrature" || cmd == "all")
      sub->add_option("--convergence-csv", convergence, "Write the adaptive refinement table of the bubble integral");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  const auto* sub = app.get_subcommands().front();
  const std::string suite = kCommands.at(sub->get_name()).first;
  config.samples = samples;
  if (sub->count("--tol") > 0) config.tol = tol;

  try {
    const qcy::SuiteResult result = qcy::run_suite(suite, config);
    const qcy::Format fmt = qcy::parse_format(format);
    if (out.empty()) {
      qcy::emit(result, fmt, std::cout);
    } else {
      std::ofstream os(out);
      if (!os) {
        std::cerr << "qcy-audit: cannot open " << out << "\n";
        return kUsage;
      }
      qcy::emit(result, fmt, os);
    }
    if (!convergence.empty()) {
      if (const int rc = write_convergence(convergence); rc != 0) return rc;
    }
    return result.all_pass() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qcy-audit: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "qcy-audit: " << e.what() << "\n";
    return 1;
  }
}
