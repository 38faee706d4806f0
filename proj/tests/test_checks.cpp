#include <string>
#include <vector>

#include "doctest.h"
#include "rct/checks.hpp"

using namespace rct;

TEST_CASE("the diagnostics suite passes on a clean build") {
  CheckOptions options;
  options.seed = 1;
  const CheckReport report = run_checks(options);

  const std::vector<std::string> expected{
      "gradient-fd",  "prox-grid",          "projection",
      "lasso-collapse", "stationarity-decay", "tau-continuation"};
  REQUIRE(report.results.size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CHECK(report.results[k].name == expected[k]);
    CHECK(report.results[k].passed);
  }
  CHECK(report.all_passed());
}

TEST_CASE("repeated runs with one seed agree; seeds vary the draws") {
  CheckOptions options;
  options.seed = 13;
  const CheckReport a = run_checks(options);
  const CheckReport b = run_checks(options);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t k = 0; k < a.results.size(); ++k) {
    CHECK(a.results[k].measured == b.results[k].measured);
  }
  CHECK(a.all_passed());

  options.seed = 14;
  const CheckReport c = run_checks(options);
  CHECK(c.all_passed());
  bool any_different = false;
  for (std::size_t k = 0; k < a.results.size(); ++k) {
    any_different = any_different ||
                    a.results[k].measured != c.results[k].measured;
  }
  CHECK(any_different);
}

TEST_CASE("a corrupted gradient is caught by the derivative check") {
  // Negative control: nudging one analytic gradient coordinate must trip
  // the finite-difference comparison, proving the check has teeth.
  CheckOptions options;
  options.seed = 1;
  options.gradient_tamper = [](Vector& grad) {
    if (grad.size() > 0) grad[0] += 1e-3;
  };
  const CheckReport report = run_checks(options);
  bool found = false;
  for (const CheckResult& r : report.results) {
    if (r.name == "gradient-fd") {
      found = true;
      CHECK_FALSE(r.passed);
      CHECK(r.measured > 1e-6);
    }
  }
  CHECK(found);
  CHECK_FALSE(report.all_passed());
}
