#pragma once

#include <string>
#include <vector>

#include "qcy/quadrature.hpp"

namespace qcy {

/// A printed constant next to the value computed for the same quantity.
struct ConstantComparison {
  std::string name;
  std::string printed_expression;
  double printed = 0.0;
  double computed = 0.0;   // NaN when there is no computed counterpart
  double ratio = 0.0;      // computed / printed, NaN without a counterpart
  bool flagged = false;    // |ratio - 1| > 1e-3
  std::string provenance;
};

struct BestConstantReport {
  /// int [(1+r^2)^2 + rho^2]^-5 dH by reduced quadrature, with error, and by
  /// its Beta-function closed form 8 pi^3 (B(3/2, 7/2)/2)(B(2, 5)/2) = pi^4/384.
  double bubble_integral = 0.0;
  double bubble_integral_error = 0.0;
  double bubble_closed_form = 0.0;
  /// int ubar^{5/2} dH, computed directly on the field.
  double ubar_power_integral = 0.0;
  QuotientReport quotient;
  /// Reading A: Lambda = quotient (so Lambda^5 = int ubar^{5/2}).
  double lambda_a = 0.0;
  double lambda5_a = 0.0;
  /// Reading B: Lambda^5 = quotient.
  double lambda_b = 0.0;
  double lambda5_b = 0.0;
  /// S_2 = Lambda^{-1/2} under each reading.
  double s2_a = 0.0;
  double s2_b = 0.0;
  /// Amplitude of ubar / (int ubar^{5/2})^{2/5}, the extremal of unit L^{5/2} norm; 2^10 Lambda^-2 under reading A.
  double v_amplitude_a = 0.0;
  std::vector<ConstantComparison> comparisons;
};

BestConstantReport best_constant_report(const QuotientOptions& options = {});

}  // namespace qcy
