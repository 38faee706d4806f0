#include <cmath>
#include <vector>

#include "doctest.h"
#include "rct/optimizer.hpp"
#include "test_support.hpp"

using namespace rct;

TEST_CASE("unpenalized smooth fit recovers least squares") {
  // eta = 0 makes the coefficient map the identity and a huge omega makes
  // the loss quadratic, so lambda = 0 must reproduce OLS.
  Dataset d = testing::gaussian_instance(17, 40, 5, 3, 0.2);
  const GroupPartition groups = GroupPartition::singletons(5);

  SolverConfig cfg;
  cfg.lambda = 0.0;
  cfg.step = 0.25;
  cfg.radius = 100.0;
  cfg.thresh = ThresholdParams{0.01, 0.0};
  cfg.huber = HuberParams{1e8};
  cfg.max_iter = 50000;
  cfg.tol = 1e-10;

  const FitResult fit = fit_rct(d, groups, cfg);
  CHECK(fit.converged);

  const Vector ols = (d.x.transpose() * d.x)
                         .ldlt()
                         .solve(d.x.transpose() * d.y);
  for (Index j = 0; j < 5; ++j) {
    CHECK(fit.beta[j] == doctest::Approx(ols[j]).epsilon(1e-7));
    CHECK(fit.beta_thresholded[j] == fit.beta[j]);  // identity map at eta = 0
  }
}

TEST_CASE("one iteration equals the hand-rolled update, both prox rules") {
  Dataset d = testing::gaussian_instance(31, 25, 6);
  const GroupPartition groups({{0, 1}, {2, 3}, {4, 5}}, 6);

  Vector init(6);
  init << 0.4, -0.3, 0.2, 0.1, 0.0, -0.5;

  SolverConfig cfg;
  cfg.lambda = 0.02;
  cfg.step = 0.1;
  cfg.radius = 50.0;
  cfg.thresh = ThresholdParams{0.05, 0.2};
  cfg.huber = HuberParams{1.1};
  cfg.max_iter = 1;
  cfg.tol = 1e-300;  // never satisfied: exactly one step runs
  cfg.stop_on_small_step = false;
  cfg.init = init;

  for (ProxRule rule : {ProxRule::kStepScaled, ProxRule::kLambdaOverStep}) {
    cfg.prox_rule = rule;
    const FitResult fit = fit_rct(d, groups, cfg);
    CHECK(fit.iterations == 1);
    CHECK_FALSE(fit.converged);

    const Vector grad = empirical_gradient(d, init, cfg.thresh, *cfg.huber);
    const double t = rule == ProxRule::kStepScaled ? cfg.step * cfg.lambda
                                                   : cfg.lambda / cfg.step;
    const Vector manual = project_l2_ball(
        group_soft_threshold(init - cfg.step * grad, groups, t), cfg.radius);
    for (Index j = 0; j < 6; ++j) CHECK(fit.beta[j] == manual[j]);
  }
}

TEST_CASE("objective_trace starts at the supplied initializer") {
  Dataset d = testing::gaussian_instance(8, 20, 4);
  const GroupPartition groups = GroupPartition::singletons(4);

  Vector init(4);
  init << 0.7, 0.0, -0.2, 0.3;

  SolverConfig cfg;
  cfg.lambda = 0.05;
  cfg.thresh = ThresholdParams{0.02, 0.1};
  cfg.huber = HuberParams{1.3};
  cfg.max_iter = 3;
  cfg.init = init;

  const FitResult fit = fit_rct(d, groups, cfg);
  REQUIRE(!fit.objective_trace.empty());
  const double expected = empirical_risk(d, init, cfg.thresh, *cfg.huber) +
                          penalty_value(init, groups, cfg.lambda);
  CHECK(fit.objective_trace[0] == expected);
  CHECK(fit.stationarity_trace.size() == fit.objective_trace.size());
}

TEST_CASE("active_groups lists exactly the blocks left nonzero") {
  Dataset d = testing::gaussian_instance(23, 60, 8, 2, 0.3);
  const GroupPartition groups({{0, 1}, {2, 3}, {4, 5}, {6, 7}}, 8);

  SolverConfig cfg;
  cfg.lambda = 0.05;
  cfg.step = 0.05;
  cfg.thresh = ThresholdParams{0.01, 0.0};
  cfg.max_iter = 5000;
  cfg.tol = 1e-7;

  const FitResult fit = fit_rct(d, groups, cfg);
  std::vector<Index> expected;
  for (Index b = 0; b < groups.block_count(); ++b) {
    bool nonzero = false;
    for (Index j : groups.block(b)) nonzero = nonzero || fit.beta[j] != 0.0;
    if (nonzero) expected.push_back(b);
  }
  CHECK(fit.active_groups == expected);
  CHECK(!fit.active_groups.empty());
}

TEST_CASE("ball constraint caps the iterate norm") {
  // Strong signal pulls the unconstrained optimum far outside the ball.
  Dataset d = testing::gaussian_instance(41, 50, 4, 4, 0.1);
  const GroupPartition groups = GroupPartition::singletons(4);

  SolverConfig cfg;
  cfg.lambda = 0.0;
  cfg.step = 0.1;
  cfg.radius = 0.5;
  cfg.thresh = ThresholdParams{0.01, 0.0};
  cfg.huber = HuberParams{1e6};
  cfg.max_iter = 2000;
  cfg.tol = 1e-8;

  const FitResult fit = fit_rct(d, groups, cfg);
  CHECK(fit.beta.norm() <= cfg.radius * (1.0 + 1e-12));
  // The pull is outward, so the iterate settles on the boundary.
  CHECK(fit.beta.norm() > 0.45);
}

TEST_CASE("overwhelming penalty collapses everything to zero immediately") {
  Dataset d = testing::gaussian_instance(3, 30, 5);
  const GroupPartition groups = GroupPartition::singletons(5);

  SolverConfig cfg;
  cfg.lambda = 1e6;
  cfg.thresh = ThresholdParams{0.01, 0.1};
  cfg.max_iter = 100;

  const FitResult fit = fit_rct(d, groups, cfg);
  CHECK(fit.converged);
  CHECK(fit.iterations <= 2);
  for (Index j = 0; j < 5; ++j) CHECK(fit.beta[j] == 0.0);
  CHECK(fit.active_groups.empty());
}

TEST_CASE("non-finite data raises DivergenceError") {
  Dataset d = testing::gaussian_instance(5, 10, 3);
  d.y[4] = std::nan("");
  const GroupPartition groups = GroupPartition::singletons(3);
  SolverConfig cfg;
  CHECK_THROWS_AS(fit_rct(d, groups, cfg), DivergenceError);
}

TEST_CASE("tau_continuation warm-starts and validates the schedule") {
  Dataset d = testing::gaussian_instance(29, 40, 6, 3, 0.2);
  const GroupPartition groups = GroupPartition::singletons(6);

  SolverConfig cfg;
  cfg.lambda = 0.01;
  cfg.step = 0.05;
  cfg.thresh = ThresholdParams{0.1, 0.2};
  cfg.max_iter = 8000;
  cfg.tol = 1e-7;

  CHECK_THROWS_AS(tau_continuation(d, groups, cfg, {0.01, 0.1}), ParameterError);
  CHECK_THROWS_AS(tau_continuation(d, groups, cfg, {0.1, 0.0}), ParameterError);
  CHECK_THROWS_AS(tau_continuation(d, groups, cfg, {}), ParameterError);

  // Repeating the same tau must restart at the previous optimum and
  // terminate almost immediately.
  const std::vector<double> taus{0.05, 0.05};
  const auto fits = tau_continuation(d, groups, cfg, taus);
  REQUIRE(fits.size() == 2);
  CHECK(fits[0].converged);
  CHECK(fits[1].converged);
  CHECK(fits[1].iterations <= 2);
  for (Index j = 0; j < 6; ++j) {
    CHECK(fits[1].beta[j] == doctest::Approx(fits[0].beta[j]).epsilon(1e-9));
  }
}

TEST_CASE("backtracking keeps the objective monotone under a reckless step") {
  Dataset d = testing::gaussian_instance(37, 30, 5, 3, 0.4, 0.1);
  const GroupPartition groups = GroupPartition::singletons(5);

  SolverConfig cfg;
  cfg.lambda = 0.02;
  cfg.step = 1.0;  // far above 1/L for this design
  cfg.thresh = ThresholdParams{0.02, 0.1};
  cfg.backtrack = true;
  cfg.max_iter = 300;
  cfg.tol = 1e-7;

  const FitResult fit = fit_rct(d, groups, cfg);
  for (std::size_t k = 1; k < fit.objective_trace.size(); ++k) {
    CHECK(fit.objective_trace[k] <= fit.objective_trace[k - 1] + 1e-8);
  }
}

TEST_CASE("configuration validation rejects bad values") {
  SolverConfig cfg;
  cfg.lambda = -0.1;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg.lambda = 0.1;
  cfg.step = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg.step = 0.01;
  cfg.radius = -2.0;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg.radius = 20.0;
  cfg.max_iter = 0;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg.max_iter = 10;
  cfg.tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg.tol = 1e-6;
  cfg.thresh.tau = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg.thresh.tau = 0.01;
  CHECK_NOTHROW(cfg.validate());
}
