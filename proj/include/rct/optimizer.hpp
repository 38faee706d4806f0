#pragma once

#include <optional>
#include <vector>

#include "rct/risk.hpp"

namespace rct {

// Rule used to turn the step size and penalty level into the blockwise
// soft-threshold amount of each iteration.
enum class ProxRule {
  kStepScaled,   // threshold = step * lambda
  kLambdaOverStep,  // threshold = lambda / step (compatibility mode)
};

struct SolverConfig {
  double lambda = 0.1;   // group penalty level, >= 0
  double step = 0.01;    // gradient step size h, > 0
  double radius = 20.0;  // feasible-ball radius r, > 0
  ThresholdParams thresh;
  std::optional<HuberParams> huber;  // absent: 1.345 * mad_scale(y)
  int max_iter = 20000;
  double tol = 1e-6;     // stationarity tolerance, > 0
  ProxRule prox_rule = ProxRule::kStepScaled;
  bool backtrack = false;      // halve the step while the objective rises
  bool stop_on_small_step = true;  // stop when ||beta_next - beta|| <= 1e-10
  std::optional<Vector> init;  // absent: all zeros

  void validate() const {
    require(lambda >= 0.0, "solver: lambda must be nonnegative");
    require(step > 0.0, "solver: step must be positive");
    require(radius > 0.0, "solver: radius must be positive");
    require(max_iter >= 1, "solver: max_iter must be at least 1");
    require(tol > 0.0, "solver: tol must be positive");
    thresh.validate();
    if (huber) huber->validate();
  }
};

struct FitResult {
  Vector beta;              // final iterate
  Vector beta_thresholded;  // apply_G(beta)
  int iterations = 0;
  bool converged = false;
  std::vector<double> objective_trace;     // risk + penalty per iterate
  std::vector<double> stationarity_trace;  // one entry per iterate
  std::vector<Index> active_groups;        // blocks with nonzero beta
  double omega = 0.0;  // loss scale actually used
};

// Composite projected proximal gradient descent on
//   (1/n) sum_i L(y_i - <x_i, G(beta)>) + lambda * sum_b ||beta_b||_2
// over the centered ball of the configured radius.
// Iteration: beta <- project(group_soft_threshold(beta - h * grad, t)).
// Deterministic: identical inputs give bitwise-identical traces.
FitResult fit_rct(const Dataset& data, const GroupPartition& groups,
                  const SolverConfig& config);

// Warm-started sweep over a nonincreasing, positive tau sequence; run k
// starts from the solution of run k-1.  Returns one fit per tau.
std::vector<FitResult> tau_continuation(const Dataset& data,
                                        const GroupPartition& groups,
                                        SolverConfig config,
                                        const std::vector<double>& taus);

}  // namespace rct
