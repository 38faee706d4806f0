#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "rct/datagen.hpp"
#include "rct/evaluation.hpp"
#include "test_support.hpp"

using namespace rct;

TEST_CASE("selection_metrics counts confusion rates coordinatewise") {
  Vector truth(4), est(4);
  truth << 1.0, 0.0, 1.0, 0.0;
  est << 1.0, 1.0, 0.0, 0.0;
  const MetricsReport m = selection_metrics(est, truth, 0.0);
  CHECK(m.fpr == 0.5);
  CHECK(m.fnr == 0.5);
  CHECK(m.l2_loss == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(m.l2_loss_thresholded == m.l2_loss);
}

TEST_CASE("selection_metrics returns zero on empty denominators") {
  Vector all_active = Vector::Ones(3);
  Vector none_active = Vector::Zero(3);
  Vector est = Vector::Ones(3);
  CHECK(selection_metrics(est, all_active, 0.0).fpr == 0.0);  // no negatives
  CHECK(selection_metrics(Vector::Zero(3), none_active, 0.0).fnr == 0.0);
}

TEST_CASE("selection_metrics applies the zero tolerance to the estimate") {
  Vector truth(2), est(2);
  truth << 1.0, 0.0;
  est << 0.05, 0.0;
  CHECK(selection_metrics(est, truth, 0.1).fnr == 1.0);   // 0.05 counts as zero
  CHECK(selection_metrics(est, truth, 0.01).fnr == 0.0);  // now it is selected
  // The truth is compared against exact zero, not the tolerance.
  Vector weak_truth(2);
  weak_truth << 0.05, 0.0;
  CHECK(selection_metrics(est, weak_truth, 0.1).fnr == 1.0);
}

TEST_CASE("region_metrics scores whole regions") {
  const GroupPartition regions({{0, 1}, {2, 3}, {4, 5}}, 6);
  Vector truth = Vector::Zero(6);
  truth[0] = 2.0;  // region 0 active
  Vector est = Vector::Zero(6);
  est[3] = 1.0;    // region 1 selected

  const auto crossed = region_metrics(est, truth, regions, 0.0);
  CHECK(crossed.first == 0.5);   // one of two inactive regions selected
  CHECK(crossed.second == 1.0);  // the active region missed

  const auto perfect = region_metrics(truth, truth, regions, 0.0);
  CHECK(perfect.first == 0.0);
  CHECK(perfect.second == 0.0);
}

TEST_CASE("eta_from_lasso takes the interpolated nonzero-magnitude quantile") {
  Vector pilot(7);
  pilot << 0.3, 0.0, -0.1, 0.5, 0.0, -0.4, 0.2;
  // Nonzero magnitudes sorted: 0.1 0.2 0.3 0.4 0.5; position 0.3 * 4 = 1.2
  // interpolates 0.2 and 0.3.
  CHECK(eta_from_lasso(pilot, 0.30) == doctest::Approx(0.22).epsilon(1e-12));
  CHECK(eta_from_lasso(pilot, 0.0) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(eta_from_lasso(pilot, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(eta_from_lasso(Vector::Zero(5), 0.30) == 0.0);
  CHECK_THROWS_AS(eta_from_lasso(pilot, 1.5), ParameterError);
}

TEST_CASE("method names round-trip") {
  for (FitMethod m :
       {FitMethod::kRct, FitMethod::kLasso, FitMethod::kAdaptiveLasso}) {
    CHECK(method_from_name(method_name(m)) == m);
  }
  CHECK(method_name(FitMethod::kRct) == "rct");
  CHECK(method_name(FitMethod::kAdaptiveLasso) == "adalasso");
  CHECK_THROWS_AS(method_from_name("stgp"), ParameterError);
}

TEST_CASE("default_lambda_grid is log-spaced and descending") {
  const std::vector<double> grid = default_lambda_grid(10.0, 5, 1e-2);
  REQUIRE(grid.size() == 5);
  const double expected[] = {10.0, 3.1622776601683795, 1.0,
                             0.31622776601683794, 0.1};
  for (int k = 0; k < 5; ++k) {
    CHECK(grid[static_cast<std::size_t>(k)] ==
          doctest::Approx(expected[k]).epsilon(1e-12));
  }
  for (std::size_t k = 1; k < grid.size(); ++k) CHECK(grid[k] < grid[k - 1]);

  const std::vector<double> single = default_lambda_grid(2.5, 1, 1e-3);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 2.5);

  CHECK_THROWS_AS(default_lambda_grid(0.0, 5, 1e-2), ParameterError);
  CHECK_THROWS_AS(default_lambda_grid(1.0, 0, 1e-2), ParameterError);
  CHECK_THROWS_AS(default_lambda_grid(1.0, 5, 0.0), ParameterError);
}

TEST_CASE("rct_lambda_max is the exact shutoff level for one step") {
  Dataset d = testing::gaussian_instance(15, 40, 10, 3, 0.4);
  const GroupPartition groups({{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}}, 10);
  const ThresholdParams thresh{0.01, 0.1};
  const HuberParams huber{1.5};
  const double lmax = rct_lambda_max(d, groups, thresh, huber);
  CHECK(lmax > 0.0);

  SolverConfig cfg;
  cfg.step = 0.05;
  cfg.thresh = thresh;
  cfg.huber = huber;
  cfg.max_iter = 1;
  cfg.tol = 1e-300;
  cfg.stop_on_small_step = false;

  // Just above the threshold the first step stays at zero.
  cfg.lambda = lmax * 1.0000001;
  const FitResult off = fit_rct(d, groups, cfg);
  CHECK(off.beta.cwiseAbs().maxCoeff() == 0.0);

  // Just below it the strongest block escapes.
  cfg.lambda = lmax * 0.99;
  const FitResult on = fit_rct(d, groups, cfg);
  CHECK(on.beta.cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("cross_validate reports the singleton grid faithfully") {
  Dataset d = testing::gaussian_instance(33, 30, 6, 2, 0.3);
  const GroupPartition groups = GroupPartition::singletons(6);
  CVConfig cfg;
  cfg.method = FitMethod::kLasso;
  const CVResult res = cross_validate(d, groups, {0.3}, {0.0}, cfg);
  REQUIRE(res.grid.size() == 1);
  CHECK(res.grid[0].first == 0.3);
  CHECK(res.grid[0].second == 0.0);
  REQUIRE(res.mean_errors.size() == 1);
  CHECK(res.mean_errors[0] > 0.0);
  CHECK(res.best_lambda == 0.3);
  CHECK(res.best_eta == 0.0);
}

TEST_CASE("cross_validate validates folds and grids") {
  Dataset d = testing::gaussian_instance(2, 10, 4);
  const GroupPartition groups = GroupPartition::singletons(4);
  CVConfig cfg;
  cfg.method = FitMethod::kLasso;

  cfg.folds = 1;
  CHECK_THROWS_AS(cross_validate(d, groups, {0.1}, {0.0}, cfg), ParameterError);
  cfg.folds = 11;  // more folds than rows
  CHECK_THROWS_AS(cross_validate(d, groups, {0.1}, {0.0}, cfg), ParameterError);
  cfg.folds = 5;
  CHECK_THROWS_AS(cross_validate(d, groups, {}, {0.0}, cfg), ParameterError);
  CHECK_THROWS_AS(cross_validate(d, groups, {0.1}, {}, cfg), ParameterError);
  CHECK_THROWS_AS(cross_validate(d, groups, {-0.1}, {0.0}, cfg),
                  ParameterError);

  cfg.method = FitMethod::kAdaptiveLasso;  // needs pilot weights
  CHECK_THROWS_AS(cross_validate(d, groups, {0.1}, {0.0}, cfg), ParameterError);
}

TEST_CASE("cv ties resolve to the largest lambda, then the largest eta") {
  // Zero response: every grid point fits beta = 0 with zero heldout error.
  Dataset d;
  d.x = Matrix::Random(20, 4);
  d.y = Vector::Zero(20);

  const GroupPartition groups = GroupPartition::singletons(4);
  CVConfig cfg;
  cfg.folds = 4;
  cfg.method = FitMethod::kRct;
  cfg.solver.max_iter = 50;

  const CVResult res =
      cross_validate(d, groups, {0.5, 1.0}, {0.0, 0.2}, cfg);
  CHECK(res.best_lambda == 1.0);
  CHECK(res.best_eta == 0.2);
  for (double err : res.mean_errors) CHECK(err == 0.0);
}

TEST_CASE("cross_validate is invariant to the worker count") {
  Dataset d = testing::gaussian_instance(71, 30, 8, 3, 0.5, 0.1);
  const GroupPartition groups = GroupPartition::singletons(8);

  CVConfig cfg;
  cfg.folds = 3;
  cfg.method = FitMethod::kRct;
  cfg.solver.max_iter = 500;
  cfg.solver.tol = 1e-5;
  cfg.solver.thresh = ThresholdParams{0.01, 0.1};
  cfg.solver.huber = HuberParams{1.3};

  const ThresholdParams thresh{0.01, 0.1};
  const double lmax = rct_lambda_max(d, groups, thresh, HuberParams{1.3});
  const std::vector<double> lambdas{0.8 * lmax, 0.3 * lmax, 0.1 * lmax};
  const std::vector<double> etas{0.0, 0.1};

  cfg.workers = 1;
  const CVResult serial = cross_validate(d, groups, lambdas, etas, cfg);
  cfg.workers = 2;
  const CVResult threaded = cross_validate(d, groups, lambdas, etas, cfg);

  REQUIRE(serial.mean_errors.size() == threaded.mean_errors.size());
  for (std::size_t k = 0; k < serial.mean_errors.size(); ++k) {
    CHECK(serial.mean_errors[k] == threaded.mean_errors[k]);
  }
  CHECK(serial.best_lambda == threaded.best_lambda);
  CHECK(serial.best_eta == threaded.best_eta);
}

TEST_CASE("published_reference quotes the expected rows") {
  const auto rows3 = published_reference(3, "a");
  REQUIRE(rows3.size() == 5);
  bool saw_rct = false, saw_lasso = false;
  for (const auto& row : rows3) {
    CHECK(row.source == "published");
    CHECK(row.replications == 50);
    CHECK(row.model_id == 3);
    CHECK(row.case_label == "a");
    CHECK_FALSE(row.region_fpr_mean.has_value());
    CHECK(row.l2_raw_mean == row.l2_mean);
    if (row.method == "rct") {
      saw_rct = true;
      CHECK(row.fpr_mean == 0.002);
      CHECK(row.fnr_mean == 0.018);
      CHECK(row.l2_mean == 1.466);
    }
    if (row.method == "lasso") {
      saw_lasso = true;
      CHECK(row.fnr_mean == 0.153);
    }
  }
  CHECK(saw_rct);
  CHECK(saw_lasso);

  const auto rows9 = published_reference(9, "a");
  bool saw_region = false;
  for (const auto& row : rows9) {
    if (row.method == "rct") {
      saw_region = true;
      REQUIRE(row.region_fpr_mean.has_value());
      CHECK(*row.region_fpr_mean == 0.087);
      REQUIRE(row.region_fnr_mean.has_value());
      CHECK(*row.region_fnr_mean == 0.0);
    }
  }
  CHECK(saw_region);

  CHECK(published_reference(1, "zzz").empty());
}

TEST_CASE("a small benchmark runs clean and deterministically") {
  BenchmarkRequest req;
  req.models = {{1, "a"}};
  req.n = 40;
  req.p = 24;
  req.replications = 2;
  req.base_seed = 7;
  req.methods = {FitMethod::kRct, FitMethod::kLasso};
  req.tuning.lambda_points = 4;
  req.tuning.lambda_min_ratio = 0.1;
  req.tuning.lasso_lambda_points = 6;
  req.tuning.lasso_lambda_min_ratio = 0.1;
  req.tuning.folds = 3;
  req.tuning.solver.max_iter = 1500;
  req.tuning.solver.tol = 1e-4;

  const BenchmarkTable table = run_benchmark(req);

  // Two computed rows plus the five published baselines for this model.
  REQUIRE(table.rows.size() == 7);
  CHECK(table.rows[0].source == "computed");
  CHECK(table.rows[0].method == "rct");
  CHECK(table.rows[1].method == "lasso");
  for (std::size_t k = 2; k < table.rows.size(); ++k) {
    CHECK(table.rows[k].source == "published");
  }

  REQUIRE(table.records.size() == 4);
  for (const auto& record : table.records) {
    CHECK(record.ok);
    CHECK(record.error.empty());
    CHECK(record.metrics.fpr >= 0.0);
    CHECK(record.metrics.fpr <= 1.0);
    CHECK(record.metrics.fnr >= 0.0);
    CHECK(record.metrics.fnr <= 1.0);
    CHECK(record.metrics.l2_loss >= 0.0);
  }
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(table.rows[k].failures == 0);
    CHECK(table.rows[k].replications == 2);
    CHECK_FALSE(table.rows[k].region_fpr_mean.has_value());
  }
  // The lasso reports the same vector raw and thresholded.
  CHECK(table.rows[1].l2_mean == table.rows[1].l2_raw_mean);

  // The tuned penalty is always drawn from the configured grid.
  for (const auto& record : table.records) {
    CHECK(record.lambda > 0.0);
    if (record.method == "rct") CHECK(record.eta >= 0.0);
  }

  const BenchmarkTable again = run_benchmark(req);
  REQUIRE(again.records.size() == table.records.size());
  for (std::size_t k = 0; k < table.records.size(); ++k) {
    CHECK(again.records[k].lambda == table.records[k].lambda);
    CHECK(again.records[k].eta == table.records[k].eta);
    CHECK(again.records[k].metrics.l2_loss == table.records[k].metrics.l2_loss);
    CHECK(again.records[k].metrics.fpr == table.records[k].metrics.fpr);
  }
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    CHECK(again.rows[k].l2_mean == table.rows[k].l2_mean);
    CHECK(again.rows[k].fpr_mean == table.rows[k].fpr_mean);
  }
}

TEST_CASE("run_benchmark validates its request up front") {
  BenchmarkRequest req;
  req.models = {};
  CHECK_THROWS_AS(run_benchmark(req), ParameterError);

  req.models = {{1, "a"}};
  req.methods = {};
  CHECK_THROWS_AS(run_benchmark(req), ParameterError);

  req.methods = {FitMethod::kLasso};
  req.replications = 0;
  CHECK_THROWS_AS(run_benchmark(req), ParameterError);

  req.replications = 1;
  req.models = {{42, "a"}};
  CHECK_THROWS_AS(run_benchmark(req), ParameterError);
}
