#include "rct/optimizer.hpp"

#include <cmath>
#include <string>

namespace rct {

namespace {

double objective_at(const Dataset& data, const Vector& beta,
                    const ThresholdParams& thresh, const HuberParams& huber,
                    const GroupPartition& groups, double lambda) {
  return empirical_risk(data, beta, thresh, huber) +
         penalty_value(beta, groups, lambda);
}

}  // namespace

FitResult fit_rct(const Dataset& data, const GroupPartition& groups,
                  const SolverConfig& config) {
  config.validate();
  data.validate();
  require_shape(groups.dimension() == data.p(),
                "fit_rct: partition does not match predictor count");

  const HuberParams huber = config.huber ? *config.huber : default_huber(data.y);
  const double prox_t = config.prox_rule == ProxRule::kStepScaled
                            ? config.step * config.lambda
                            : config.lambda / config.step;

  Vector beta;
  if (config.init) {
    require_shape(config.init->size() == data.p(),
                  "fit_rct: init length mismatch");
    beta = project_l2_ball(*config.init, config.radius);
  } else {
    beta = Vector::Zero(data.p());
  }

  FitResult result;
  result.omega = huber.omega;

  Vector grad(data.p());
  bool small_step_stop = false;
  for (int k = 0;; ++k) {
    const double risk = risk_and_gradient(data, beta, config.thresh, huber, grad);
    const double objective = risk + penalty_value(beta, groups, config.lambda);
    const double stat = stationarity_norm(grad, beta, groups, config.lambda);
    result.objective_trace.push_back(objective);
    result.stationarity_trace.push_back(stat);

    if (!std::isfinite(objective)) {
      throw DivergenceError("fit_rct: non-finite objective at iteration " +
                            std::to_string(k));
    }
    if (stat <= config.tol || small_step_stop) {
      result.iterations = k;
      result.converged = true;
      break;
    }
    if (k >= config.max_iter) {
      result.iterations = k;
      result.converged = false;
      break;
    }

    double h = config.step;
    double t = prox_t;
    Vector next = project_l2_ball(
        group_soft_threshold(beta - h * grad, groups, t), config.radius);
    if (config.backtrack) {
      for (int halvings = 0; halvings < 40; ++halvings) {
        const double next_obj = objective_at(data, next, config.thresh, huber,
                                             groups, config.lambda);
        if (next_obj <= objective + 1e-8) break;
        h *= 0.5;
        if (config.prox_rule == ProxRule::kStepScaled) t = h * config.lambda;
        next = project_l2_ball(
            group_soft_threshold(beta - h * grad, groups, t), config.radius);
      }
    }

    if (config.stop_on_small_step && (next - beta).norm() <= 1e-10) {
      // Record the final iterate's traces on the next pass, then stop.
      small_step_stop = true;
    }
    beta = std::move(next);
  }

  result.beta = beta;
  result.beta_thresholded = apply_G(beta, config.thresh);
  for (Index b = 0; b < groups.block_count(); ++b) {
    if (groups.block_norm(beta, b) > 0.0) result.active_groups.push_back(b);
  }
  return result;
}

std::vector<FitResult> tau_continuation(const Dataset& data,
                                        const GroupPartition& groups,
                                        SolverConfig config,
                                        const std::vector<double>& taus) {
  require(!taus.empty(), "tau_continuation: empty tau sequence");
  for (std::size_t k = 0; k < taus.size(); ++k) {
    require(taus[k] > 0.0, "tau_continuation: taus must be positive");
    require(k == 0 || taus[k] <= taus[k - 1],
            "tau_continuation: taus must be nonincreasing");
  }
  std::vector<FitResult> fits;
  fits.reserve(taus.size());
  for (double tau : taus) {
    config.thresh.tau = tau;
    if (!fits.empty()) config.init = fits.back().beta;
    fits.push_back(fit_rct(data, groups, config));
  }
  return fits;
}

}  // namespace rct
