#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rct/common.hpp"

namespace rct {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;  // worst value observed by the check
  double bound = 0.0;     // the check passes when measured <= bound
  std::string note;
};

struct CheckReport {
  std::vector<CheckResult> results;

  bool all_passed() const {
    for (const CheckResult& r : results) {
      if (!r.passed) return false;
    }
    return true;
  }
};

struct CheckOptions {
  std::uint64_t seed = 1;
  // Applied to each analytic gradient before it meets the finite-difference
  // oracle.  Lets tests prove the gradient check can fail.
  std::function<void(Vector&)> gradient_tamper;
};

// Self-contained numerical diagnostics: finite-difference gradient audit,
// proximal operator versus dense grid search, ball projection laws,
// plain-lasso collapse, stationarity decay, and threshold continuation.
CheckReport run_checks(const CheckOptions& options);

}  // namespace rct
