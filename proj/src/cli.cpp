#include "rct/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rct/baselines.hpp"
#include "rct/checks.hpp"
#include "rct/csv_io.hpp"
#include "rct/datagen.hpp"
#include "rct/dataset.hpp"
#include "rct/evaluation.hpp"
#include "rct/loss.hpp"
#include "rct/optimizer.hpp"
#include "rct/parallel.hpp"
#include "rct/penalty.hpp"
#include "rct/risk.hpp"

namespace rct {

namespace {

using nlohmann::json;

json to_json(const Vector& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

json to_json(const std::vector<double>& v) {
  json arr = json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

json to_json(const std::vector<Index>& v) {
  json arr = json::array();
  for (Index x : v) arr.push_back(static_cast<std::int64_t>(x));
  return arr;
}

void write_json_file(const std::string& path, const json& doc) {
  write_text_file(path, doc.dump(2) + "\n");
}

// data.csv -> data_meta.json / data_groups.txt
std::string sidecar_path(const std::string& csv_path,
                         const std::string& suffix) {
  std::string stem = csv_path;
  if (stem.size() >= 4 && stem.compare(stem.size() - 4, 4, ".csv") == 0) {
    stem.resize(stem.size() - 4);
  }
  return stem + suffix;
}

void standardize_in_place(Dataset& data) {
  const Index n = data.n();
  require(n >= 2, "standardization needs at least 2 observations");
  for (Index j = 0; j < data.p(); ++j) {
    const double mean = data.x.col(j).mean();
    data.x.col(j).array() -= mean;
    const double sd =
        std::sqrt(data.x.col(j).squaredNorm() / static_cast<double>(n - 1));
    if (sd > 0.0) data.x.col(j) /= sd;
  }
  data.y.array() -= data.y.mean();
}

GroupPartition resolve_groups(const std::string& spec, Index p) {
  if (spec == "singleton") return GroupPartition::singletons(p);
  return GroupPartition(read_groups_file(spec), p);
}

ProxRule resolve_prox_rule(const std::string& name) {
  if (name == "step-scaled") return ProxRule::kStepScaled;
  if (name == "lambda-over-step") return ProxRule::kLambdaOverStep;
  throw ParameterError("unknown prox threshold rule: " + name +
                       " (expected step-scaled | lambda-over-step)");
}

std::vector<std::pair<int, std::string>> parse_models(
    const std::string& text) {
  std::vector<std::pair<int, std::string>> models;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find(',', start);
    if (pos == std::string::npos) pos = text.size();
    const std::string item = text.substr(start, pos - start);
    if (!item.empty()) {
      std::size_t digits = 0;
      while (digits < item.size() &&
             std::isdigit(static_cast<unsigned char>(item[digits]))) {
        ++digits;
      }
      if (digits == 0 || digits == item.size()) {
        throw ParameterError("bad model token '" + item +
                             "' (expected e.g. 3a)");
      }
      models.emplace_back(std::stoi(item.substr(0, digits)),
                          item.substr(digits));
    }
    start = pos + 1;
  }
  if (models.empty()) throw ParameterError("no models requested");
  return models;
}

std::vector<FitMethod> parse_methods(const std::string& text) {
  std::vector<FitMethod> methods;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find(',', start);
    if (pos == std::string::npos) pos = text.size();
    const std::string item = text.substr(start, pos - start);
    if (!item.empty()) methods.push_back(method_from_name(item));
    start = pos + 1;
  }
  if (methods.empty()) throw ParameterError("no methods requested");
  return methods;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  int model = 1;
  std::string case_label = "a";
  std::int64_t n = 100;
  std::int64_t p = 2000;
  std::uint64_t seed = 1;
  std::string out = "data.csv";
};

int cmd_generate(const GenerateArgs& a) {
  const Dataset data =
      sample_dataset(a.model, a.case_label, static_cast<Index>(a.n),
                     static_cast<Index>(a.p), a.seed);
  write_dataset_csv(a.out, data.x, data.y);

  json meta;
  meta["command"] = "generate";
  meta["config"] = {{"model", a.model}, {"case", a.case_label},
                    {"n", a.n},         {"p", a.p},
                    {"seed", a.seed},   {"out", a.out}};
  meta["n"] = static_cast<std::int64_t>(data.n());
  meta["p"] = static_cast<std::int64_t>(data.p());
  meta["covariance"] = data.meta.covariance;
  meta["noise"] = data.meta.noise;
  meta["jitter"] = data.meta.jitter;
  Index support = 0;
  if (data.truth) {
    meta["truth"] = to_json(*data.truth);
    for (Index j = 0; j < data.truth->size(); ++j) {
      if ((*data.truth)(j) != 0.0) ++support;
    }
  }
  if (data.groups) {
    const std::string groups_path = sidecar_path(a.out, "_groups.txt");
    write_groups_file(groups_path, data.groups->blocks());
    meta["groups_file"] = groups_path;
  }
  write_json_file(sidecar_path(a.out, "_meta.json"), meta);

  std::printf("model %d%s: n=%lld p=%lld support=%lld seed=%llu -> %s\n",
              a.model, a.case_label.c_str(), static_cast<long long>(data.n()),
              static_cast<long long>(data.p()),
              static_cast<long long>(support),
              static_cast<unsigned long long>(a.seed), a.out.c_str());
  return 0;
}

// --------------------------------------------------------------------- fit

struct FitArgs {
  std::string data_path;
  std::string out = "fit.json";
  std::string groups = "singleton";
  std::string method = "rct";
  double lambda = 0.1;
  double eta = 0.0;
  double tau = 0.01;
  double omega = 0.0;  // 0: 1.345 * robust scale of y
  double step = 0.01;
  double radius = 20.0;
  double tol = 1e-6;
  int max_iter = 20000;
  std::string prox_rule = "step-scaled";
  bool backtrack = false;
  bool standardize = false;
};

json fit_config_echo(const FitArgs& a) {
  return {{"data", a.data_path},
          {"out", a.out},
          {"groups", a.groups},
          {"method", a.method},
          {"lambda", a.lambda},
          {"eta", a.eta},
          {"tau", a.tau},
          {"omega", a.omega},
          {"step", a.step},
          {"radius", a.radius},
          {"tol", a.tol},
          {"max_iter", a.max_iter},
          {"prox_rule", a.prox_rule},
          {"backtrack", a.backtrack},
          {"standardize", a.standardize}};
}

SolverConfig solver_from_args(const FitArgs& a) {
  SolverConfig config;
  config.lambda = a.lambda;
  config.step = a.step;
  config.radius = a.radius;
  config.thresh.tau = a.tau;
  config.thresh.eta = a.eta;
  if (a.omega > 0.0) config.huber = HuberParams{a.omega};
  config.max_iter = a.max_iter;
  config.tol = a.tol;
  config.prox_rule = resolve_prox_rule(a.prox_rule);
  config.backtrack = a.backtrack;
  return config;
}

int cmd_fit(const FitArgs& a) {
  const TableData table = read_dataset_csv(a.data_path);
  Dataset data;
  data.x = table.x;
  data.y = table.y;
  if (a.standardize) standardize_in_place(data);
  const GroupPartition groups = resolve_groups(a.groups, data.p());
  const FitMethod method = method_from_name(a.method);

  json report;
  report["command"] = "fit";
  report["config"] = fit_config_echo(a);

  json result;
  if (method == FitMethod::kRct) {
    const FitResult fit = fit_rct(data, groups, solver_from_args(a));
    result["beta"] = to_json(fit.beta);
    result["beta_thresholded"] = to_json(fit.beta_thresholded);
    result["iterations"] = fit.iterations;
    result["converged"] = fit.converged;
    result["omega"] = fit.omega;
    result["active_groups"] = to_json(fit.active_groups);
    result["objective_trace"] = to_json(fit.objective_trace);
    result["stationarity_trace"] = to_json(fit.stationarity_trace);
    std::printf("fit rct: converged=%d iterations=%d active=%zu -> %s\n",
                fit.converged ? 1 : 0, fit.iterations,
                fit.active_groups.size(), a.out.c_str());
  } else {
    require(a.lambda >= 0.0, "lambda must be nonnegative");
    LassoConfig config;
    config.tol = std::min(a.tol, 1e-7);
    config.max_iter = a.max_iter;
    LassoFit fit;
    if (method == FitMethod::kAdaptiveLasso) {
      const LassoFit pilot = fit_lasso(data, a.lambda, config);
      fit = fit_adaptive_lasso(data, a.lambda, pilot.beta, config);
    } else {
      fit = fit_lasso(data, a.lambda, config);
    }
    result["beta"] = to_json(fit.beta);
    result["iterations"] = fit.iterations;
    result["converged"] = fit.converged;
    result["step"] = fit.step;
    std::printf("fit %s: converged=%d iterations=%d -> %s\n",
                a.method.c_str(), fit.converged ? 1 : 0, fit.iterations,
                a.out.c_str());
  }
  report["result"] = result;
  write_json_file(a.out, report);
  return 0;
}

// ---------------------------------------------------------------------- cv

struct CvArgs {
  FitArgs fit;  // shared data/solver flags; fit.lambda ignored for grids
  int folds = 5;
  int lambda_points = 30;
  double lambda_min_ratio = 1e-3;
  std::vector<double> lambdas;  // explicit grid overrides the generated one
  std::string eta_rule = "lasso-quantile";  // lasso-quantile | cv | fixed
  std::uint64_t shuffle_seed = 1;
  bool refit = true;
  int workers = 0;
};

// Lasso pilot for the data-driven eta rules; tuned by its own small CV.
Vector lasso_pilot(const Dataset& data, int folds, std::uint64_t shuffle_seed,
                   int workers) {
  const double lmax = lasso_lambda_max(data);
  const std::vector<double> grid = default_lambda_grid(lmax, 20, 1e-2);
  CVConfig config;
  config.folds = folds;
  config.shuffle_seed = shuffle_seed;
  config.method = FitMethod::kLasso;
  config.workers = workers;
  const CVResult cv = cross_validate(data, GroupPartition::singletons(data.p()),
                                     grid, {0.0}, config);
  return fit_lasso(data, cv.best_lambda).beta;
}

int cmd_cv(const CvArgs& a) {
  const TableData table = read_dataset_csv(a.fit.data_path);
  Dataset data;
  data.x = table.x;
  data.y = table.y;
  if (a.fit.standardize) standardize_in_place(data);
  const GroupPartition groups = resolve_groups(a.fit.groups, data.p());
  const FitMethod method = method_from_name(a.fit.method);
  const int workers = a.workers > 0 ? a.workers : default_worker_count();

  json report;
  report["command"] = "cv";
  json config_echo = fit_config_echo(a.fit);
  config_echo["folds"] = a.folds;
  config_echo["lambda_points"] = a.lambda_points;
  config_echo["lambda_min_ratio"] = a.lambda_min_ratio;
  config_echo["lambdas"] = to_json(a.lambdas);
  config_echo["eta_rule"] = a.eta_rule;
  config_echo["shuffle_seed"] = a.shuffle_seed;
  config_echo["refit"] = a.refit;
  config_echo["workers"] = workers;
  report["config"] = config_echo;

  CVConfig cv_config;
  cv_config.folds = a.folds;
  cv_config.shuffle_seed = a.shuffle_seed;
  cv_config.method = method;
  cv_config.workers = workers;
  cv_config.solver = solver_from_args(a.fit);
  cv_config.lasso.max_iter = a.fit.max_iter;

  json grid_json = json::array();
  double best_error = std::numeric_limits<double>::infinity();
  double best_lambda = 0.0;
  double best_eta = 0.0;
  bool any = false;
  const auto improves = [&](double err, double lambda, double eta) {
    if (!any) return true;
    if (err != best_error) return err < best_error;
    if (lambda != best_lambda) return lambda > best_lambda;
    return eta > best_eta;
  };

  std::vector<double> etas;
  if (method != FitMethod::kRct) {
    etas = {0.0};
  } else if (a.eta_rule == "fixed") {
    etas = {a.fit.eta};
  } else {
    const Vector pilot =
        lasso_pilot(data, a.folds, a.shuffle_seed, workers);
    if (a.eta_rule == "lasso-quantile") {
      etas = {eta_from_lasso(pilot)};
    } else if (a.eta_rule == "cv") {
      etas = {0.0, eta_from_lasso(pilot, 0.1), eta_from_lasso(pilot, 0.3),
              eta_from_lasso(pilot, 0.5)};
    } else {
      throw ParameterError("unknown eta rule: " + a.eta_rule +
                           " (expected lasso-quantile | cv | fixed)");
    }
  }

  for (double eta : etas) {
    std::vector<double> grid = a.lambdas;
    if (grid.empty()) {
      double lmax = 0.0;
      if (method == FitMethod::kRct) {
        ThresholdParams thresh = cv_config.solver.thresh;
        thresh.eta = eta;
        const HuberParams huber = cv_config.solver.huber
                                      ? *cv_config.solver.huber
                                      : default_huber(data.y);
        lmax = rct_lambda_max(data, groups, thresh, huber);
      } else {
        lmax = lasso_lambda_max(data);
      }
      grid = default_lambda_grid(lmax, a.lambda_points, a.lambda_min_ratio);
    }
    const CVResult cv = cross_validate(data, groups, grid, {eta}, cv_config);
    for (std::size_t g = 0; g < cv.grid.size(); ++g) {
      grid_json.push_back({{"lambda", cv.grid[g].first},
                           {"eta", cv.grid[g].second},
                           {"mean_error", cv.mean_errors[g]}});
      if (improves(cv.mean_errors[g], cv.grid[g].first, cv.grid[g].second)) {
        best_error = cv.mean_errors[g];
        best_lambda = cv.grid[g].first;
        best_eta = cv.grid[g].second;
        any = true;
      }
    }
  }
  require(any, "cross validation evaluated an empty grid");

  report["grid"] = grid_json;
  report["best"] = {{"lambda", best_lambda},
                    {"eta", best_eta},
                    {"mean_error", best_error}};

  if (a.refit) {
    FitArgs final_args = a.fit;
    final_args.lambda = best_lambda;
    final_args.eta = best_eta;
    json fit_json;
    if (method == FitMethod::kRct) {
      const FitResult fit = fit_rct(data, groups, solver_from_args(final_args));
      fit_json["beta"] = to_json(fit.beta);
      fit_json["beta_thresholded"] = to_json(fit.beta_thresholded);
      fit_json["iterations"] = fit.iterations;
      fit_json["converged"] = fit.converged;
      fit_json["omega"] = fit.omega;
      fit_json["active_groups"] = to_json(fit.active_groups);
    } else {
      LassoConfig config;
      config.max_iter = a.fit.max_iter;
      LassoFit fit;
      if (method == FitMethod::kAdaptiveLasso) {
        const LassoFit pilot = fit_lasso(data, best_lambda, config);
        fit = fit_adaptive_lasso(data, best_lambda, pilot.beta, config);
      } else {
        fit = fit_lasso(data, best_lambda, config);
      }
      fit_json["beta"] = to_json(fit.beta);
      fit_json["iterations"] = fit.iterations;
      fit_json["converged"] = fit.converged;
    }
    report["fit"] = fit_json;
  }

  write_json_file(a.fit.out, report);
  std::printf("cv %s: best lambda=%.6g eta=%.6g error=%.6g -> %s\n",
              a.fit.method.c_str(), best_lambda, best_eta, best_error,
              a.fit.out.c_str());
  return 0;
}

// --------------------------------------------------------------- benchmark

struct BenchmarkArgs {
  std::string models = "3a";
  std::string methods = "rct,lasso";
  std::int64_t n = 100;
  std::int64_t p = 2000;
  int replications = 50;
  std::uint64_t seed = 1;
  int workers = 0;
  bool published = true;
  std::string out_csv = "benchmark.csv";
  std::string out_json = "benchmark.json";
  int folds = 5;
  int lambda_points = 12;
  double lambda_min_ratio = 0.01;
  int lasso_lambda_points = 20;
  std::string eta_rule = "lasso-quantile";
  double tau = 0.01;
  double step = 0.01;
  double radius = 20.0;
  int cv_max_iter = 4000;
  double cv_tol = 1e-5;
};

std::string csv_cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::string benchmark_csv(const BenchmarkTable& table) {
  std::string body =
      "model,case,method,source,replications,failures,"
      "fpr_mean,fpr_sd,fnr_mean,fnr_sd,"
      "region_fpr_mean,region_fpr_sd,region_fnr_mean,region_fnr_sd,"
      "l2_mean,l2_sd,l2_raw_mean,l2_raw_sd\n";
  for (const BenchmarkRow& row : table.rows) {
    body += std::to_string(row.model_id) + ',' + row.case_label + ',' +
            row.method + ',' + row.source + ',' +
            std::to_string(row.replications) + ',' +
            std::to_string(row.failures) + ',' + format_double(row.fpr_mean) +
            ',' + format_double(row.fpr_sd) + ',' +
            format_double(row.fnr_mean) + ',' + format_double(row.fnr_sd) +
            ',' + csv_cell(row.region_fpr_mean) + ',' +
            csv_cell(row.region_fpr_sd) + ',' + csv_cell(row.region_fnr_mean) +
            ',' + csv_cell(row.region_fnr_sd) + ',' +
            format_double(row.l2_mean) + ',' + format_double(row.l2_sd) + ',' +
            format_double(row.l2_raw_mean) + ',' +
            format_double(row.l2_raw_sd) + '\n';
  }
  return body;
}

json row_json(const BenchmarkRow& row) {
  json j{{"model", row.model_id},
         {"case", row.case_label},
         {"method", row.method},
         {"source", row.source},
         {"replications", row.replications},
         {"failures", row.failures},
         {"fpr_mean", row.fpr_mean},
         {"fpr_sd", row.fpr_sd},
         {"fnr_mean", row.fnr_mean},
         {"fnr_sd", row.fnr_sd},
         {"l2_mean", row.l2_mean},
         {"l2_sd", row.l2_sd},
         {"l2_raw_mean", row.l2_raw_mean},
         {"l2_raw_sd", row.l2_raw_sd}};
  j["region_fpr_mean"] =
      row.region_fpr_mean ? json(*row.region_fpr_mean) : json();
  j["region_fpr_sd"] = row.region_fpr_sd ? json(*row.region_fpr_sd) : json();
  j["region_fnr_mean"] =
      row.region_fnr_mean ? json(*row.region_fnr_mean) : json();
  j["region_fnr_sd"] = row.region_fnr_sd ? json(*row.region_fnr_sd) : json();
  return j;
}

json record_json(const ReplicationRecord& r) {
  json j{{"model", r.model_id},
         {"case", r.case_label},
         {"method", r.method},
         {"replication", r.replication},
         {"seed", r.seed},
         {"ok", r.ok},
         {"error", r.error},
         {"lambda", r.lambda},
         {"eta", r.eta},
         {"omega", r.omega},
         {"iterations", r.iterations},
         {"converged", r.converged},
         {"fpr", r.metrics.fpr},
         {"fnr", r.metrics.fnr},
         {"l2", r.metrics.l2_loss_thresholded},
         {"l2_raw", r.metrics.l2_loss}};
  j["region_fpr"] =
      r.metrics.region_fpr ? json(*r.metrics.region_fpr) : json();
  j["region_fnr"] =
      r.metrics.region_fnr ? json(*r.metrics.region_fnr) : json();
  return j;
}

int cmd_benchmark(const BenchmarkArgs& a) {
  BenchmarkRequest request;
  request.models = parse_models(a.models);
  request.methods = parse_methods(a.methods);
  request.n = static_cast<Index>(a.n);
  request.p = static_cast<Index>(a.p);
  request.replications = a.replications;
  request.base_seed = a.seed;
  request.workers = a.workers > 0 ? a.workers : default_worker_count();
  request.include_published = a.published;
  request.tuning.folds = a.folds;
  request.tuning.lambda_points = a.lambda_points;
  request.tuning.lambda_min_ratio = a.lambda_min_ratio;
  request.tuning.lasso_lambda_points = a.lasso_lambda_points;
  request.tuning.eta_rule = a.eta_rule;
  request.tuning.solver.thresh.tau = a.tau;
  request.tuning.solver.step = a.step;
  request.tuning.solver.radius = a.radius;
  request.tuning.solver.max_iter = a.cv_max_iter;
  request.tuning.solver.tol = a.cv_tol;

  const BenchmarkTable table = run_benchmark(request);

  json report;
  report["command"] = "benchmark";
  report["config"] = {{"models", a.models},
                      {"methods", a.methods},
                      {"n", a.n},
                      {"p", a.p},
                      {"replications", a.replications},
                      {"seed", a.seed},
                      {"workers", request.workers},
                      {"published", a.published},
                      {"out_csv", a.out_csv},
                      {"out_json", a.out_json},
                      {"folds", a.folds},
                      {"lambda_points", a.lambda_points},
                      {"lambda_min_ratio", a.lambda_min_ratio},
                      {"lasso_lambda_points", a.lasso_lambda_points},
                      {"eta_rule", a.eta_rule},
                      {"tau", a.tau},
                      {"step", a.step},
                      {"radius", a.radius},
                      {"cv_max_iter", a.cv_max_iter},
                      {"cv_tol", a.cv_tol}};
  json rows = json::array();
  for (const BenchmarkRow& row : table.rows) rows.push_back(row_json(row));
  json records = json::array();
  for (const ReplicationRecord& r : table.records) {
    records.push_back(record_json(r));
  }
  report["rows"] = rows;
  report["records"] = records;

  write_text_file(a.out_csv, benchmark_csv(table));
  write_json_file(a.out_json, report);

  int failures = 0;
  for (const BenchmarkRow& row : table.rows) {
    if (row.source == "computed") failures += row.failures;
    std::printf("%d%s %-14s %-9s fpr=%s fnr=%s l2=%s\n", row.model_id,
                row.case_label.c_str(), row.method.c_str(), row.source.c_str(),
                format_double(row.fpr_mean).c_str(),
                format_double(row.fnr_mean).c_str(),
                format_double(row.l2_mean).c_str());
  }
  if (failures > 0) {
    std::printf("note: %d replication(s) failed; see records\n", failures);
  }
  return 0;
}

// ------------------------------------------------------------------- check

struct CheckArgs {
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_check(const CheckArgs& a) {
  CheckOptions options;
  options.seed = a.seed;
  const CheckReport report = run_checks(options);
  for (const CheckResult& r : report.results) {
    std::printf("%-4s %-20s measured=%.3e bound=%.3e  %s\n",
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.measured,
                r.bound, r.note.c_str());
  }
  if (!a.out.empty()) {
    json doc;
    doc["command"] = "check";
    doc["config"] = {{"seed", a.seed}, {"out", a.out}};
    json results = json::array();
    for (const CheckResult& r : report.results) {
      results.push_back({{"name", r.name},
                         {"passed", r.passed},
                         {"measured", r.measured},
                         {"bound", r.bound},
                         {"note", r.note}});
    }
    doc["results"] = results;
    doc["all_passed"] = report.all_passed();
    write_json_file(a.out, doc);
  }
  return report.all_passed() ? 0 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "Robust sparse regression with smooth coefficient thresholding"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Read option defaults from an INI/TOML file "
                 "(sections per subcommand)");

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand(
      "generate", "Simulate a dataset from the model library");
  generate->add_option("--model", gen.model, "Model id (1-10)")
      ->capture_default_str();
  generate->add_option("--case", gen.case_label, "Noise case (a|b|c)")
      ->capture_default_str();
  generate->add_option("--n", gen.n, "Observations")->capture_default_str();
  generate->add_option("--p", gen.p, "Predictors")->capture_default_str();
  generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  generate->add_option("--out", gen.out, "Output CSV path")
      ->capture_default_str();

  FitArgs fit;
  CLI::App* fit_cmd =
      app.add_subcommand("fit", "Fit one model at fixed parameters");
  const auto add_fit_flags = [](CLI::App* cmd, FitArgs& args) {
    cmd->add_option("--data", args.data_path, "Input dataset CSV")
        ->required();
    cmd->add_option("--out", args.out, "Output report path")
        ->capture_default_str();
    cmd->add_option("--groups", args.groups,
                    "Group file path or 'singleton'")
        ->capture_default_str();
    cmd->add_option("--method", args.method, "rct | lasso | adalasso")
        ->capture_default_str();
    cmd->add_option("--lambda", args.lambda, "Penalty level")
        ->capture_default_str();
    cmd->add_option("--eta", args.eta, "Threshold location")
        ->capture_default_str();
    cmd->add_option("--tau", args.tau, "Threshold smoothness")
        ->capture_default_str();
    cmd->add_option("--omega", args.omega,
                    "Loss scale; 0 = robust default from y")
        ->capture_default_str();
    cmd->add_option("--step", args.step, "Gradient step size")
        ->capture_default_str();
    cmd->add_option("--radius", args.radius, "Feasible ball radius")
        ->capture_default_str();
    cmd->add_option("--tol", args.tol, "Stationarity tolerance")
        ->capture_default_str();
    cmd->add_option("--max-iter", args.max_iter, "Iteration cap")
        ->capture_default_str();
    cmd->add_option("--prox-threshold", args.prox_rule,
                    "step-scaled | lambda-over-step")
        ->capture_default_str();
    cmd->add_flag("--backtrack", args.backtrack,
                  "Halve the step while the objective rises");
    cmd->add_flag("--standardize", args.standardize,
                  "Center/scale predictors and center y first");
  };
  add_fit_flags(fit_cmd, fit);

  CvArgs cv;
  CLI::App* cv_cmd =
      app.add_subcommand("cv", "Cross-validate penalty parameters");
  add_fit_flags(cv_cmd, cv.fit);
  cv_cmd->add_option("--folds", cv.folds, "CV folds")->capture_default_str();
  cv_cmd->add_option("--lambda-points", cv.lambda_points,
                     "Generated grid size")
      ->capture_default_str();
  cv_cmd->add_option("--lambda-min-ratio", cv.lambda_min_ratio,
                     "Grid floor relative to lambda max")
      ->capture_default_str();
  cv_cmd->add_option("--lambdas", cv.lambdas,
                     "Explicit lambda grid (overrides generated)");
  cv_cmd->add_option("--eta-rule", cv.eta_rule,
                     "lasso-quantile | cv | fixed")
      ->capture_default_str();
  cv_cmd->add_option("--shuffle-seed", cv.shuffle_seed, "Fold shuffle seed")
      ->capture_default_str();
  cv_cmd->add_flag("--refit,!--no-refit", cv.refit,
                   "Refit on all data at the selected parameters");
  cv_cmd->add_option("--workers", cv.workers, "Worker threads; 0 = auto")
      ->capture_default_str();

  BenchmarkArgs bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "benchmark", "Replicate simulation tables for selected models");
  bench_cmd->add_option("--models", bench.models, "e.g. 3a,7b")
      ->capture_default_str();
  bench_cmd->add_option("--methods", bench.methods, "e.g. rct,lasso,adalasso")
      ->capture_default_str();
  bench_cmd->add_option("--n", bench.n, "Observations")->capture_default_str();
  bench_cmd->add_option("--p", bench.p, "Predictors")->capture_default_str();
  bench_cmd->add_option("--reps", bench.replications, "Replications")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Base seed")
      ->capture_default_str();
  bench_cmd->add_option("--workers", bench.workers, "Worker threads; 0 = auto")
      ->capture_default_str();
  bench_cmd->add_flag("--published,!--no-published", bench.published,
                      "Quote published reference rows");
  bench_cmd->add_option("--out-csv", bench.out_csv, "Table CSV path")
      ->capture_default_str();
  bench_cmd->add_option("--out-json", bench.out_json, "Full report path")
      ->capture_default_str();
  bench_cmd->add_option("--folds", bench.folds, "CV folds")
      ->capture_default_str();
  bench_cmd->add_option("--lambda-points", bench.lambda_points,
                        "Lambda grid size")
      ->capture_default_str();
  bench_cmd->add_option("--lambda-min-ratio", bench.lambda_min_ratio,
                        "Lambda grid floor ratio")
      ->capture_default_str();
  bench_cmd
      ->add_option("--lasso-lambda-points", bench.lasso_lambda_points,
                   "Baseline grid size")
      ->capture_default_str();
  bench_cmd->add_option("--eta-rule", bench.eta_rule, "lasso-quantile | cv")
      ->capture_default_str();
  bench_cmd->add_option("--tau", bench.tau, "Threshold smoothness")
      ->capture_default_str();
  bench_cmd->add_option("--step", bench.step, "Gradient step size")
      ->capture_default_str();
  bench_cmd->add_option("--radius", bench.radius, "Feasible ball radius")
      ->capture_default_str();
  bench_cmd->add_option("--cv-max-iter", bench.cv_max_iter,
                        "Iteration cap inside CV")
      ->capture_default_str();
  bench_cmd->add_option("--cv-tol", bench.cv_tol, "Tolerance inside CV")
      ->capture_default_str();

  CheckArgs check;
  CLI::App* check_cmd =
      app.add_subcommand("check", "Run the numerical diagnostics suite");
  check_cmd->add_option("--seed", check.seed, "RNG seed")
      ->capture_default_str();
  check_cmd->add_option("--out", check.out, "Optional JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (fit_cmd->parsed()) return cmd_fit(fit);
    if (cv_cmd->parsed()) return cmd_cv(cv);
    if (bench_cmd->parsed()) return cmd_benchmark(bench);
    if (check_cmd->parsed()) return cmd_check(check);
    std::fprintf(stderr, "no subcommand selected\n");
    return 1;
  } catch (const ParameterError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

}  // namespace rct
