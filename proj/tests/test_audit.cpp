#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "qcy/best_constant.hpp"
#include "qcy/qmatrix.hpp"
#include "qcy/sampling.hpp"
#include "qcy/suites.hpp"

using namespace qcy;

namespace {

BlockVector zero_blocks() {
  BlockVector v;
  for (auto& b : v) b = Vec4::Zero();
  return v;
}

bool same_except_time(const SuiteResult& a, const SuiteResult& b) {
  if (a.suite != b.suite || a.seed != b.seed || a.reports.size() != b.reports.size()) return false;
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    const Report &x = a.reports[i], &y = b.reports[i];
    if (x.check != y.check || x.samples != y.samples || x.max_residual != y.max_residual ||
        x.tolerance != y.tolerance || x.pass != y.pass || x.provenance != y.provenance || x.notes != y.notes)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Q matrix entries") {
  const Mat6& q = q_matrix().m;
  CHECK((q - q.transpose()).norm() == 0.0);
  CHECK(q(0, 0) == 2.0);
  CHECK(q(3, 3) == 22.0 / 3.0);
  CHECK(q(0, 3) == 10.0 / 3.0);
  CHECK(q(0, 4) == -2.0 / 3.0);
  CHECK(q(3, 4) == -2.0 / 3.0);
  CHECK(q(0, 1) == 0.0);
}

TEST_CASE("Q spectrum") {
  const Vec6 ev = q_spectrum();
  const double r2 = std::sqrt(2.0);
  CHECK(std::abs(ev(0)) < 1e-12);
  CHECK(std::abs(ev(1)) < 1e-12);
  CHECK(std::abs(ev(2) - 2 * (2 - r2)) < 1e-12);
  CHECK(std::abs(ev(3) - 2 * (2 + r2)) < 1e-12);
  CHECK(std::abs(ev(4) - 10) < 1e-12);
  CHECK(std::abs(ev(5) - 10) < 1e-12);
  CHECK(ev.minCoeff() >= -1e-12);
  CHECK(q_kernel_dimension() == 2);
}

TEST_CASE("quadratic form examples") {
  BlockVector v = zero_blocks();
  v[0] = Vec4::Unit(0);
  CHECK(q_form(v) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(quadratic_form_audit(v) < 1e-12);
  v = zero_blocks();
  v[3] = Vec4::Unit(0);
  CHECK(q_form(v) == doctest::Approx(22.0 / 3.0).epsilon(1e-15));
  CHECK(quadratic_form_audit(v) < 1e-12);
  v[0] = Vec4::Unit(0);
  CHECK(q_form(v) == doctest::Approx(16.0).epsilon(1e-15));
  CHECK(q_form_cyclic(v) == doctest::Approx(16.0).epsilon(1e-15));
}

TEST_CASE("quadratic form audit on random blocks") {
  Sampler s(0, 1);
  for (int k = 0; k < 100; ++k) {
    BlockVector v;
    for (auto& b : v) b = s.vec4();
    CHECK(quadratic_form_audit(v) <= 1e-12);
    CHECK(q_form(v) >= -1e-12);
  }
}

TEST_CASE("reports") {
  CHECK(make_report("a", 1, 1e-3, 1e-3, "x").pass);
  CHECK_FALSE(make_report("a", 1, 2e-3, 1e-3, "x").pass);
  CHECK_FALSE(make_report("a", 1, std::nan(""), 1.0, "x").pass);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("run_suite qmatrix") {
  const SuiteResult r = run_suite("qmatrix");
  CHECK(r.reports.size() == 2);
  CHECK(r.all_pass());
  CHECK_THROWS_AS(run_suite("nonsense"), std::invalid_argument);
  CHECK(std::find(suite_names().begin(), suite_names().end(), "all") != suite_names().end());
}

TEST_CASE("run_suite is deterministic for a seed") {
  SuiteConfig c;
  c.seed = 42;
  const SuiteResult a = run_suite("extremal", c), b = run_suite("extremal", c);
  CHECK(same_except_time(a, b));
  CHECK(a.all_pass());
  c.seed = 43;
  CHECK_FALSE(same_except_time(a, run_suite("extremal", c)));
}

TEST_CASE("overrides") {
  SuiteConfig c;
  c.samples = 3;
  const SuiteResult r = run_suite("frames", c);
  CHECK(r.reports.front().samples == 3);
  c.tol = 0.0;
  const SuiteResult strict = run_suite("qmatrix", c);
  CHECK_FALSE(strict.all_pass());
  for (const auto& rep : strict.reports) CHECK(rep.tolerance == 0.0);
}

TEST_CASE("json schema") {
  const SuiteResult r = run_suite("qmatrix");
  const auto doc = nlohmann::json::parse(emit(r, Format::Json));
  REQUIRE(doc.is_object());
  CHECK(doc.at("suite") == "qmatrix");
  CHECK(doc.at("seed") == 0);
  REQUIRE(doc.at("reports").is_array());
  CHECK(doc.at("reports").size() == 2);
  for (const auto& rep : doc.at("reports")) {
    CHECK(rep.at("check").is_string());
    CHECK(rep.at("samples").is_number_integer());
    CHECK(rep.at("max_residual").is_number());
    CHECK(rep.at("tolerance").is_number());
    CHECK(rep.at("pass").is_boolean());
    CHECK(rep.at("provenance").is_string());
    CHECK(rep.at("seconds").is_number());
    CHECK(rep.at("pass").get<bool>() == (rep.at("max_residual").get<double>() <= rep.at("tolerance").get<double>()));
  }
}

TEST_CASE("csv and text") {
  const SuiteResult r = run_suite("qmatrix");
  const std::string csv = emit(r, Format::Csv);
  CHECK(csv.rfind("suite,seed,check,samples,max_residual,tolerance,pass,provenance,seconds", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  const std::string text = emit(r, Format::Text);
  CHECK(text.find("qmatrix.spectrum") != std::string::npos);
}

TEST_CASE("best-constant reconciliation") {
  const BestConstantReport b = best_constant_report();
  CHECK(std::abs(b.bubble_integral / b.bubble_closed_form - 1.0) < 1e-8);
  // the quotient of the extremal is (int ubar^(5/2))^(1/5)
  CHECK(std::abs(b.lambda5_a / b.ubar_power_integral - 1.0) < 1e-8);
  CHECK(std::abs(b.s2_a - 1.0 / std::sqrt(b.lambda_a)) < 1e-14);
  CHECK(std::abs(std::pow(b.lambda_b, 5) - b.quotient.quotient) < 1e-10 * b.quotient.quotient);
  bool printed_s2 = false;
  for (const auto& c : b.comparisons) {
    CHECK(std::isfinite(c.printed));
    if (!std::isnan(c.computed)) CHECK(c.flagged == (std::abs(c.ratio - 1.0) > 1e-3));
    if (c.printed_expression.find("2 sqrt(3)/pi^(3/5)") != std::string::npos) {
      printed_s2 = true;
      CHECK(c.printed == doctest::Approx(1.743013).epsilon(1e-6));
    }
  }
  CHECK(printed_s2);
}
