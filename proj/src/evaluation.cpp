#include "rct/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rct/datagen.hpp"
#include "rct/parallel.hpp"
#include "rct/rng.hpp"

namespace rct {

namespace {

bool nonzero(double v, double zero_tol) { return std::abs(v) > zero_tol; }

double rate(Index numerator, Index denominator) {
  return denominator == 0
             ? 0.0
             : static_cast<double>(numerator) / static_cast<double>(denominator);
}

}  // namespace

MetricsReport selection_metrics(const Vector& estimate, const Vector& truth,
                                double zero_tol) {
  require_shape(estimate.size() == truth.size(),
                "selection_metrics: length mismatch");
  require(zero_tol >= 0.0, "selection_metrics: zero_tol must be nonnegative");
  Index fp = 0, tn = 0, fn = 0, tp = 0;
  for (Index j = 0; j < truth.size(); ++j) {
    const bool active = truth[j] != 0.0;
    const bool selected = nonzero(estimate[j], zero_tol);
    if (active) {
      selected ? ++tp : ++fn;
    } else {
      selected ? ++fp : ++tn;
    }
  }
  MetricsReport report;
  report.fpr = rate(fp, fp + tn);
  report.fnr = rate(fn, fn + tp);
  report.l2_loss = (estimate - truth).norm();
  report.l2_loss_thresholded = report.l2_loss;
  return report;
}

std::pair<double, double> region_metrics(const Vector& estimate,
                                         const Vector& truth,
                                         const GroupPartition& groups,
                                         double zero_tol) {
  require_shape(estimate.size() == truth.size() &&
                    truth.size() == groups.dimension(),
                "region_metrics: dimension mismatch");
  Index fp = 0, tn = 0, fn = 0, tp = 0;
  for (Index b = 0; b < groups.block_count(); ++b) {
    bool active = false, selected = false;
    for (Index j : groups.block(b)) {
      active = active || truth[j] != 0.0;
      selected = selected || nonzero(estimate[j], zero_tol);
    }
    if (active) {
      selected ? ++tp : ++fn;
    } else {
      selected ? ++fp : ++tn;
    }
  }
  return {rate(fp, fp + tn), rate(fn, fn + tp)};
}

double eta_from_lasso(const Vector& pilot, double quantile) {
  require(quantile >= 0.0 && quantile <= 1.0,
          "eta_from_lasso: quantile must lie in [0, 1]");
  std::vector<double> magnitudes;
  for (Index j = 0; j < pilot.size(); ++j) {
    if (pilot[j] != 0.0) magnitudes.push_back(std::abs(pilot[j]));
  }
  if (magnitudes.empty()) return 0.0;
  std::sort(magnitudes.begin(), magnitudes.end());
  const double pos =
      quantile * static_cast<double>(magnitudes.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= magnitudes.size()) return magnitudes.back();
  return magnitudes[lo] + frac * (magnitudes[lo + 1] - magnitudes[lo]);
}

std::string method_name(FitMethod m) {
  switch (m) {
    case FitMethod::kRct: return "rct";
    case FitMethod::kLasso: return "lasso";
    case FitMethod::kAdaptiveLasso: return "adalasso";
  }
  throw ParameterError("method_name: unknown method");
}

FitMethod method_from_name(const std::string& name) {
  if (name == "rct") return FitMethod::kRct;
  if (name == "lasso") return FitMethod::kLasso;
  if (name == "adalasso") return FitMethod::kAdaptiveLasso;
  throw ParameterError("unknown method '" + name +
                       "' (expected rct, lasso or adalasso)");
}

std::vector<double> default_lambda_grid(double max_value, int points,
                                        double min_ratio) {
  require(max_value > 0.0, "lambda grid: max value must be positive");
  require(points >= 1, "lambda grid: need at least one point");
  require(min_ratio > 0.0 && min_ratio <= 1.0,
          "lambda grid: min_ratio must lie in (0, 1]");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  if (points == 1) {
    grid.push_back(max_value);
    return grid;
  }
  const double log_max = std::log(max_value);
  const double log_min = std::log(max_value * min_ratio);
  for (int k = 0; k < points; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(points - 1);
    grid.push_back(std::exp(log_max + t * (log_min - log_max)));
  }
  return grid;
}

double rct_lambda_max(const Dataset& data, const GroupPartition& groups,
                      const ThresholdParams& thresh, const HuberParams& huber) {
  const Vector grad =
      empirical_gradient(data, Vector::Zero(data.p()), thresh, huber);
  double best = 0.0;
  for (Index b = 0; b < groups.block_count(); ++b) {
    best = std::max(best, groups.block_norm(grad, b));
  }
  return best;
}

namespace {

struct FoldSplit {
  std::vector<std::vector<Index>> train;
  std::vector<std::vector<Index>> test;
};

FoldSplit make_folds(Index n, int folds, std::uint64_t shuffle_seed) {
  require(folds >= 2, "cross_validate: need at least 2 folds");
  require(folds <= n, "cross_validate: more folds than observations");
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  Rng rng(shuffle_seed);
  rng.shuffle(perm);
  std::vector<int> fold_of(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    fold_of[static_cast<std::size_t>(perm[i])] = static_cast<int>(i % folds);
  }
  FoldSplit split;
  split.train.resize(static_cast<std::size_t>(folds));
  split.test.resize(static_cast<std::size_t>(folds));
  for (Index i = 0; i < n; ++i) {
    for (int f = 0; f < folds; ++f) {
      (fold_of[static_cast<std::size_t>(i)] == f ? split.test : split.train)
          [static_cast<std::size_t>(f)]
              .push_back(i);
    }
  }
  return split;
}

Dataset subset_rows(const Dataset& data, const std::vector<Index>& rows) {
  Dataset out;
  out.x.resize(static_cast<Index>(rows.size()), data.p());
  out.y.resize(static_cast<Index>(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    out.x.row(static_cast<Index>(k)) = data.x.row(rows[k]);
    out.y[static_cast<Index>(k)] = data.y[rows[k]];
  }
  out.meta = data.meta;
  return out;
}

// True when (err, lambda, eta) beats the incumbent under the tie rules:
// smaller error, then larger lambda, then larger eta.
bool improves(double err, double lambda, double eta, double best_err,
              double best_lambda, double best_eta) {
  if (err < best_err) return true;
  if (err > best_err) return false;
  if (lambda > best_lambda) return true;
  if (lambda < best_lambda) return false;
  return eta > best_eta;
}

}  // namespace

CVResult cross_validate(const Dataset& data, const GroupPartition& groups,
                        const std::vector<double>& lambda_grid,
                        const std::vector<double>& eta_grid,
                        const CVConfig& config) {
  data.validate();
  require(!lambda_grid.empty(), "cross_validate: empty lambda grid");
  require(!eta_grid.empty(), "cross_validate: empty eta grid");
  for (double l : lambda_grid) {
    require(l >= 0.0, "cross_validate: negative lambda");
  }
  if (config.method == FitMethod::kAdaptiveLasso) {
    require(config.weights.has_value(),
            "cross_validate: adaptive lasso needs pilot weights");
  }

  const FoldSplit split = make_folds(data.n(), config.folds, config.shuffle_seed);
  const int folds = config.folds;
  const int n_eta = static_cast<int>(eta_grid.size());
  const int n_lambda = static_cast<int>(lambda_grid.size());

  // Visit lambdas large-to-small inside each chain so warm starts shrink
  // the active set instead of growing it from scratch.
  std::vector<int> lambda_order(static_cast<std::size_t>(n_lambda));
  std::iota(lambda_order.begin(), lambda_order.end(), 0);
  std::sort(lambda_order.begin(), lambda_order.end(), [&](int a, int b) {
    return lambda_grid[static_cast<std::size_t>(a)] >
           lambda_grid[static_cast<std::size_t>(b)];
  });

  // errors[eta][lambda][fold]
  std::vector<std::vector<std::vector<double>>> errors(
      static_cast<std::size_t>(n_eta),
      std::vector<std::vector<double>>(
          static_cast<std::size_t>(n_lambda),
          std::vector<double>(static_cast<std::size_t>(folds), 0.0)));

  const int chains = n_eta * folds;
  parallel_for(
      chains,
      [&](int chain) {
        const int e = chain / folds;
        const int f = chain % folds;
        const Dataset train =
            subset_rows(data, split.train[static_cast<std::size_t>(f)]);
        const auto& test_rows = split.test[static_cast<std::size_t>(f)];

        // Chains inherit any caller-provided start before warm-starting
        // down the grid; a saturated robust loss barely moves from zero.
        std::optional<Vector> warm = config.solver.init;
        for (int li : lambda_order) {
          const double lambda = lambda_grid[static_cast<std::size_t>(li)];
          const double eta = eta_grid[static_cast<std::size_t>(e)];
          Vector prediction_coef;
          if (config.method == FitMethod::kRct) {
            SolverConfig solver = config.solver;
            solver.lambda = lambda;
            solver.thresh.eta = eta;
            solver.init = warm;
            const FitResult fit = fit_rct(train, groups, solver);
            warm = fit.beta;
            prediction_coef = fit.beta_thresholded;
          } else {
            LassoConfig lasso = config.lasso;
            lasso.init = warm;
            if (config.method == FitMethod::kAdaptiveLasso) {
              lasso.weights = config.weights;
            }
            const LassoFit fit = fit_lasso(train, lambda, lasso);
            warm = fit.beta;
            prediction_coef = fit.beta;
          }
          double err = 0.0;
          for (Index i : test_rows) {
            const double r = data.y[i] - data.x.row(i).dot(prediction_coef);
            err += config.score == CVScore::kSquared ? r * r : std::abs(r);
          }
          errors[static_cast<std::size_t>(e)][static_cast<std::size_t>(li)]
                [static_cast<std::size_t>(f)] =
                    err / static_cast<double>(test_rows.size());
        }
      },
      config.workers);

  CVResult result;
  result.rule = "cv";
  double best_err = std::numeric_limits<double>::infinity();
  double best_se = 0.0;
  result.best_lambda = lambda_grid.front();
  result.best_eta = eta_grid.front();
  for (int e = 0; e < n_eta; ++e) {
    for (int li : lambda_order) {
      const auto& fold_errors =
          errors[static_cast<std::size_t>(e)][static_cast<std::size_t>(li)];
      const double mean =
          std::accumulate(fold_errors.begin(), fold_errors.end(), 0.0) /
          static_cast<double>(folds);
      double var = 0.0;
      for (double fe : fold_errors) var += (fe - mean) * (fe - mean);
      const double se =
          folds > 1 ? std::sqrt(var / static_cast<double>(folds - 1) /
                                static_cast<double>(folds))
                    : 0.0;
      const double lambda = lambda_grid[static_cast<std::size_t>(li)];
      const double eta = eta_grid[static_cast<std::size_t>(e)];
      result.grid.emplace_back(lambda, eta);
      result.mean_errors.push_back(mean);
      result.error_ses.push_back(se);
      if (improves(mean, lambda, eta, best_err, result.best_lambda,
                   result.best_eta) ||
          !std::isfinite(best_err)) {
        best_err = mean;
        best_se = se;
        result.best_lambda = lambda;
        result.best_eta = eta;
      }
    }
  }

  if (config.selection == CVSelection::kOneStandardError &&
      std::isfinite(best_err)) {
    // Most regularized model whose mean error sits within one standard
    // error of the minimum; parsimony against fold noise.
    const double cutoff = best_err + best_se;
    bool found = false;
    for (std::size_t i = 0; i < result.grid.size(); ++i) {
      if (result.mean_errors[i] > cutoff) continue;
      const auto [lambda, eta] = result.grid[i];
      if (!found || lambda > result.best_lambda ||
          (lambda == result.best_lambda && eta > result.best_eta)) {
        result.best_lambda = lambda;
        result.best_eta = eta;
        found = true;
      }
    }
  }
  return result;
}

namespace {

struct Aggregate {
  int count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) {
    ++count;
    const double delta = v - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (v - mean);
  }
  double sd() const {
    return count <= 1 ? 0.0 : std::sqrt(m2 / static_cast<double>(count - 1));
  }
};

// One replication of one model/case: shared draw, one record per method.
std::vector<ReplicationRecord> run_replication(
    const BenchmarkRequest& request, int model_id,
    const std::string& case_label, int rep) {
  const std::uint64_t seed = request.base_seed + static_cast<std::uint64_t>(rep);
  std::vector<ReplicationRecord> records;
  records.reserve(request.methods.size());
  for (FitMethod m : request.methods) {
    ReplicationRecord r;
    r.model_id = model_id;
    r.case_label = case_label;
    r.method = method_name(m);
    r.replication = rep;
    r.seed = seed;
    records.push_back(std::move(r));
  }

  Dataset data;
  try {
    data = sample_dataset(model_id, case_label, request.n, request.p, seed);
  } catch (const std::exception& ex) {
    for (auto& r : records) r.error = ex.what();
    return records;
  }
  const Vector& truth = *data.truth;
  const GroupPartition groups =
      data.groups ? *data.groups : GroupPartition::singletons(data.p());
  const TuningConfig& tuning = request.tuning;

  // Shared lasso cross-validation.  The reported lasso row follows the
  // baseline selection rule, while the pilot used downstream (adaptive
  // weights, threshold level, robust scale, solver start) takes the CV
  // minimum: an overshrunk pilot would start weak signals inside the
  // threshold dead zone, where the gradient cannot pull them back out.
  LassoFit pilot;
  LassoFit lasso_record;
  double pilot_lambda = 0.0;
  double lasso_record_lambda = 0.0;
  try {
    const std::vector<double> grid =
        default_lambda_grid(lasso_lambda_max(data), tuning.lasso_lambda_points,
                            tuning.lasso_lambda_min_ratio);
    CVConfig cv;
    cv.folds = tuning.folds;
    cv.shuffle_seed = seed;
    cv.method = FitMethod::kLasso;
    cv.lasso = tuning.lasso;
    cv.selection = tuning.baseline_selection;
    cv.score = tuning.baseline_score;
    const CVResult tuned =
        cross_validate(data, GroupPartition::singletons(data.p()), grid, {0.0},
                       cv);
    lasso_record_lambda = tuned.best_lambda;
    pilot_lambda = lasso_record_lambda;
    double best_err = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < tuned.grid.size(); ++k) {
      if (tuned.mean_errors[k] < best_err ||
          (tuned.mean_errors[k] == best_err &&
           tuned.grid[k].first > pilot_lambda)) {
        best_err = tuned.mean_errors[k];
        pilot_lambda = tuned.grid[k].first;
      }
    }
    pilot = fit_lasso(data, pilot_lambda, tuning.lasso);
    lasso_record = lasso_record_lambda == pilot_lambda
                       ? pilot
                       : fit_lasso(data, lasso_record_lambda, tuning.lasso);
  } catch (const std::exception& ex) {
    for (auto& r : records) r.error = ex.what();
    return records;
  }

  auto finish = [&](ReplicationRecord& r, const Vector& beta,
                    const Vector& thresholded, double lambda, double eta,
                    double omega, int iterations, bool converged) {
    r.metrics = selection_metrics(beta, truth, 0.0);
    r.metrics.l2_loss_thresholded = (thresholded - truth).norm();
    if (data.groups) {
      const auto region = region_metrics(beta, truth, *data.groups, 0.0);
      r.metrics.region_fpr = region.first;
      r.metrics.region_fnr = region.second;
    }
    r.lambda = lambda;
    r.eta = eta;
    r.omega = omega;
    r.iterations = iterations;
    r.converged = converged;
    r.ok = true;
  };

  for (std::size_t mi = 0; mi < request.methods.size(); ++mi) {
    ReplicationRecord& r = records[mi];
    try {
      switch (request.methods[mi]) {
        case FitMethod::kLasso: {
          finish(r, lasso_record.beta, lasso_record.beta, lasso_record_lambda,
                 0.0, 0.0, lasso_record.iterations, lasso_record.converged);
          break;
        }
        case FitMethod::kAdaptiveLasso: {
          const Vector weights = adaptive_weights(pilot.beta);
          const std::vector<double> grid = default_lambda_grid(
              lasso_lambda_max(data, weights), tuning.lasso_lambda_points,
              tuning.lasso_lambda_min_ratio);
          CVConfig cv;
          cv.folds = tuning.folds;
          cv.shuffle_seed = seed;
          cv.method = FitMethod::kAdaptiveLasso;
          cv.lasso = tuning.lasso;
          cv.weights = weights;
          cv.selection = tuning.baseline_selection;
          cv.score = tuning.baseline_score;
          const CVResult tuned = cross_validate(
              data, GroupPartition::singletons(data.p()), grid, {0.0}, cv);
          LassoConfig cfg = tuning.lasso;
          cfg.weights = weights;
          const LassoFit fit = fit_lasso(data, tuned.best_lambda, cfg);
          finish(r, fit.beta, fit.beta, tuned.best_lambda, 0.0, 0.0,
                 fit.iterations, fit.converged);
          break;
        }
        case FitMethod::kRct: {
          SolverConfig solver = tuning.solver;
          if (!solver.huber) {
            // Huber scale from pilot residuals; scaling off y itself would
            // track the signal rather than the noise, and a transition far
            // outside the residual range degenerates into least squares.
            const Vector resid = data.y - data.x * pilot.beta;
            const double scale = mad_scale(resid);
            solver.huber = scale > 0.0 ? HuberParams{1.345 * scale}
                                       : default_huber(data.y);
          }
          // Start at the pilot: with a residual-scale loss the saturated
          // gradient at zero is too flat to move in any feasible budget.
          if (!solver.init) solver.init = pilot.beta;

          // Threshold levels quantile the sparser record fit: the CV-minimum
          // pilot carries enough small false positives to drag a quantile of
          // its magnitudes down to noise level.
          std::vector<double> etas;
          if (tuning.eta_rule == "lasso-quantile") {
            etas.push_back(
                eta_from_lasso(lasso_record.beta, tuning.eta_quantile));
          } else {
            require(tuning.eta_rule == "cv",
                    "eta rule must be cv or lasso-quantile");
            etas.push_back(0.0);
            for (double q : tuning.eta_quantiles) {
              const double eta = eta_from_lasso(lasso_record.beta, q);
              if (std::find(etas.begin(), etas.end(), eta) == etas.end()) {
                etas.push_back(eta);
              }
            }
          }

          double best_err = std::numeric_limits<double>::infinity();
          double best_lambda = 0.0, best_eta = 0.0;
          bool first = true;
          for (double eta : etas) {
            ThresholdParams thresh = solver.thresh;
            thresh.eta = eta;
            const double lmax =
                rct_lambda_max(data, groups, thresh, *solver.huber);
            const std::vector<double> grid =
                default_lambda_grid(lmax, tuning.lambda_points,
                                    tuning.lambda_min_ratio);
            CVConfig cv;
            cv.folds = tuning.folds;
            cv.shuffle_seed = seed;
            cv.method = FitMethod::kRct;
            cv.solver = solver;
            const CVResult tuned = cross_validate(data, groups, grid, {eta}, cv);
            const double err =
                *std::min_element(tuned.mean_errors.begin(),
                                  tuned.mean_errors.end());
            if (first ||
                improves(err, tuned.best_lambda, tuned.best_eta, best_err,
                         best_lambda, best_eta)) {
              best_err = err;
              best_lambda = tuned.best_lambda;
              best_eta = tuned.best_eta;
              first = false;
            }
          }

          SolverConfig final_cfg = solver;
          final_cfg.lambda = best_lambda;
          final_cfg.thresh.eta = best_eta;
          final_cfg.max_iter = std::max(solver.max_iter, 20000);
          const FitResult fit = fit_rct(data, groups, final_cfg);
          finish(r, fit.beta, fit.beta_thresholded, best_lambda, best_eta,
                 fit.omega, fit.iterations, fit.converged);
          break;
        }
      }
    } catch (const std::exception& ex) {
      r.ok = false;
      r.error = ex.what();
    }
  }
  return records;
}

}  // namespace

BenchmarkTable run_benchmark(const BenchmarkRequest& request) {
  require(!request.models.empty(), "run_benchmark: no models requested");
  require(!request.methods.empty(), "run_benchmark: no methods requested");
  require(request.replications >= 1, "run_benchmark: need replications >= 1");
  for (const auto& mc : request.models) {
    model_library(mc.first, mc.second);  // validates id and case early
  }

  const int n_models = static_cast<int>(request.models.size());
  const int tasks = n_models * request.replications;
  std::vector<std::vector<ReplicationRecord>> slots(
      static_cast<std::size_t>(tasks));
  parallel_for(
      tasks,
      [&](int task) {
        const int mi = task / request.replications;
        const int rep = task % request.replications;
        const auto& mc = request.models[static_cast<std::size_t>(mi)];
        slots[static_cast<std::size_t>(task)] =
            run_replication(request, mc.first, mc.second, rep);
      },
      request.workers);

  BenchmarkTable table;
  for (int mi = 0; mi < n_models; ++mi) {
    const auto& mc = request.models[static_cast<std::size_t>(mi)];
    for (std::size_t method_i = 0; method_i < request.methods.size();
         ++method_i) {
      Aggregate fpr, fnr, rfpr, rfnr, l2, l2_raw;
      int failures = 0;
      for (int rep = 0; rep < request.replications; ++rep) {
        const auto& record =
            slots[static_cast<std::size_t>(mi * request.replications + rep)]
                 [method_i];
        table.records.push_back(record);
        if (!record.ok) {
          ++failures;
          continue;
        }
        fpr.add(record.metrics.fpr);
        fnr.add(record.metrics.fnr);
        if (record.metrics.region_fpr) rfpr.add(*record.metrics.region_fpr);
        if (record.metrics.region_fnr) rfnr.add(*record.metrics.region_fnr);
        l2.add(record.metrics.l2_loss_thresholded);
        l2_raw.add(record.metrics.l2_loss);
      }
      BenchmarkRow row;
      row.model_id = mc.first;
      row.case_label = mc.second;
      row.method = method_name(request.methods[method_i]);
      row.source = "computed";
      row.replications = request.replications;
      row.failures = failures;
      row.fpr_mean = fpr.mean;
      row.fpr_sd = fpr.sd();
      row.fnr_mean = fnr.mean;
      row.fnr_sd = fnr.sd();
      if (rfpr.count > 0) {
        row.region_fpr_mean = rfpr.mean;
        row.region_fpr_sd = rfpr.sd();
        row.region_fnr_mean = rfnr.mean;
        row.region_fnr_sd = rfnr.sd();
      }
      row.l2_mean = l2.mean;
      row.l2_sd = l2.sd();
      row.l2_raw_mean = l2_raw.mean;
      row.l2_raw_sd = l2_raw.sd();
      table.rows.push_back(std::move(row));
    }
    if (request.include_published) {
      for (BenchmarkRow row : published_reference(mc.first, mc.second)) {
        table.rows.push_back(std::move(row));
      }
    }
  }
  return table;
}

}  // namespace rct
