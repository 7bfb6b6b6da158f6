#include "qcy/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qcy {

Report make_report(std::string check, std::size_t samples, double max_residual, double tolerance,
                   std::string provenance, double seconds) {
  Report r;
  r.check = std::move(check);
  r.samples = samples;
  r.max_residual = max_residual;
  r.tolerance = tolerance;
  r.pass = max_residual <= tolerance;
  r.provenance = std::move(provenance);
  r.seconds = seconds;
  return r;
}

bool SuiteResult::all_pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or text)");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void emit(const SuiteResult& result, Format format, std::ostream& os) {
  switch (format) {
    case Format::Json: {
      nlohmann::ordered_json doc;
      doc["suite"] = result.suite;
      doc["seed"] = result.seed;
      doc["reports"] = nlohmann::ordered_json::array();
      for (const auto& r : result.reports) {
        nlohmann::ordered_json j;
        j["check"] = r.check;
        j["samples"] = r.samples;
        j["max_residual"] = r.max_residual;
        j["tolerance"] = r.tolerance;
        j["pass"] = r.pass;
        j["provenance"] = r.provenance;
        j["seconds"] = r.seconds;
        if (!r.notes.empty()) j["notes"] = r.notes;
        doc["reports"].push_back(std::move(j));
      }
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      os << "suite,seed,check,samples,max_residual,tolerance,pass,provenance,seconds\n";
      for (const auto& r : result.reports) {
        os << csv_field(result.suite) << ',' << result.seed << ',' << csv_field(r.check) << ',' << r.samples << ','
           << std::setprecision(17) << r.max_residual << ',' << r.tolerance << ',' << (r.pass ? "true" : "false")
           << ',' << csv_field(r.provenance) << ',' << std::setprecision(6) << r.seconds << '\n';
      }
      break;
    }
    case Format::Text: {
      os << "suite " << result.suite << " (seed " << result.seed << ")\n";
      for (const auto& r : result.reports) {
        os << (r.pass ? "  PASS  " : "  FAIL  ") << r.check << "  residual " << std::setprecision(3)
           << std::scientific << r.max_residual << " <= " << r.tolerance << std::defaultfloat << "  [" << r.samples
           << " samples, " << std::fixed << std::setprecision(2) << r.seconds << " s, " << r.provenance << "]\n"
           << std::defaultfloat;
        for (const auto& n : r.notes) os << "        " << n << '\n';
      }
      const auto failed = std::count_if(result.reports.begin(), result.reports.end(), [](auto& r) { return !r.pass; });
      os << (failed ? std::to_string(failed) + " check(s) failed" : std::string("all checks passed")) << '\n';
      break;
    }
  }
}

std::string emit(const SuiteResult& result, Format format) {
  std::ostringstream os;
  emit(result, format, os);
  return os.str();
}

}  // namespace qcy
