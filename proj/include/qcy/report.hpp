#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qcy {

/// Outcome of one check. `pass` always equals max_residual <= tolerance.
struct Report {
  std::string check;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string provenance;
  double seconds = 0.0;
  /// Free-form detail lines shown by the text format and collected under
  /// "notes" in JSON.
  std::vector<std::string> notes;
};

Report make_report(std::string check, std::size_t samples, double max_residual, double tolerance,
                   std::string provenance, double seconds = 0.0);

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Report> reports;

  bool all_pass() const;
};

enum class Format { Json, Csv, Text };

/// Throws std::invalid_argument for names other than json, csv, text.
Format parse_format(const std::string& name);

void emit(const SuiteResult& result, Format format, std::ostream& os);
std::string emit(const SuiteResult& result, Format format);

}  // namespace qcy
