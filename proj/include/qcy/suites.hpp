#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcy/report.hpp"

namespace qcy {

struct SuiteConfig {
  std::uint64_t seed = 0;
  /// Overrides the per-check sample counts when positive.
  std::size_t samples = 0;
  /// Overrides every check's tolerance when set.
  std::optional<double> tol;
  std::size_t mc_samples = 1000000;
  int quotient_starts = 10;
  /// Run the suites of `all` concurrently.
  bool parallel = false;
  unsigned threads = 0;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs a named suite: frames, conformal, extremal, cayley, quadrature,
/// qmatrix, quotient, best-constant or all. Throws std::invalid_argument for
/// an unknown name. Deterministic for a given config, apart from timings.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config = {});

}  // namespace qcy
