#include <cstdlib>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "rct/cli.hpp"
#include "rct/csv_io.hpp"
#include "test_support.hpp"

using namespace rct;
using nlohmann::json;

namespace {

class TempDir {
 public:
  TempDir() {
    base_ = std::filesystem::temp_directory_path() /
            ("rct_cli_test_" + std::to_string(std::rand()));
    std::filesystem::create_directories(base_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(base_, ec);
  }
  std::string path(const std::string& name) const {
    return (base_ / name).string();
  }

 private:
  std::filesystem::path base_;
};

int run(std::vector<std::string> args) {
  std::vector<const char*> argv;
  argv.push_back("rct");
  for (const std::string& s : args) argv.push_back(s.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

json load_json(const std::string& path) {
  return json::parse(read_text_file(path));
}

std::set<int> support_of(const json& beta) {
  std::set<int> support;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (beta[j].get<double>() != 0.0) support.insert(static_cast<int>(j));
  }
  return support;
}

}  // namespace

TEST_CASE("generate writes the dataset, metadata and a stable byte stream") {
  TempDir tmp;
  const std::string csv = tmp.path("data.csv");
  const std::string meta_path = tmp.path("data_meta.json");

  CHECK(run({"generate", "--model", "1", "--case", "b", "--n", "15", "--p",
             "25", "--seed", "42", "--out", csv}) == 0);
  REQUIRE(std::filesystem::exists(csv));
  REQUIRE(std::filesystem::exists(meta_path));

  const json meta = load_json(meta_path);
  CHECK(meta["command"] == "generate");
  CHECK(meta["config"]["model"] == 1);
  CHECK(meta["config"]["case"] == "b");
  CHECK(meta["config"]["seed"] == 42);
  CHECK(meta["n"] == 15);
  CHECK(meta["p"] == 25);
  REQUIRE(meta.contains("truth"));
  CHECK(meta["truth"].size() == 25);

  const TableData table = read_dataset_csv(csv);
  CHECK(table.x.rows() == 15);
  CHECK(table.x.cols() == 25);

  // Same invocation, same bytes.
  const std::string csv_bytes = read_text_file(csv);
  const std::string meta_bytes = read_text_file(meta_path);
  CHECK(run({"generate", "--model", "1", "--case", "b", "--n", "15", "--p",
             "25", "--seed", "42", "--out", csv}) == 0);
  CHECK(read_text_file(csv) == csv_bytes);
  CHECK(read_text_file(meta_path) == meta_bytes);
}

TEST_CASE("generate emits a groups sidecar for region models") {
  TempDir tmp;
  const std::string csv = tmp.path("regions.csv");
  CHECK(run({"generate", "--model", "9", "--case", "a", "--n", "10", "--p",
             "100", "--seed", "5", "--out", csv}) == 0);
  const std::string groups_path = tmp.path("regions_groups.txt");
  REQUIRE(std::filesystem::exists(groups_path));
  const auto blocks = read_groups_file(groups_path);
  CHECK(blocks.size() == 25);
  const json meta = load_json(tmp.path("regions_meta.json"));
  CHECK(meta["groups_file"] == groups_path);
}

TEST_CASE("generate rejects invalid model requests with exit 1") {
  TempDir tmp;
  CHECK(run({"generate", "--model", "11", "--out", tmp.path("x.csv")}) == 1);
  CHECK(run({"generate", "--model", "1", "--case", "d", "--out",
             tmp.path("x.csv")}) == 1);
}

TEST_CASE("unknown flags and missing subcommands exit 1") {
  CHECK(run({}) == 1);
  CHECK(run({"generate", "--frobnicate", "3"}) == 1);
  CHECK(run({"fit"}) == 1);  // --data is required
}

TEST_CASE("fit with the identity coefficient map matches the plain lasso") {
  TempDir tmp;
  const std::string csv = tmp.path("data.csv");
  const Dataset d = testing::gaussian_instance(9, 60, 10, 3, 0.3);
  write_dataset_csv(csv, d.x, d.y);

  const double lmax =
      (d.x.transpose() * d.y).cwiseAbs().maxCoeff() / static_cast<double>(d.n());
  const std::string lambda = format_double(0.2 * lmax);

  const std::string rct_out = tmp.path("rct.json");
  const std::string lasso_out = tmp.path("lasso.json");
  CHECK(run({"fit", "--data", csv, "--method", "rct", "--lambda", lambda,
             "--eta", "0", "--omega", "1e8", "--step", "0.2", "--tol", "1e-8",
             "--max-iter", "50000", "--out", rct_out}) == 0);
  CHECK(run({"fit", "--data", csv, "--method", "lasso", "--lambda", lambda,
             "--tol", "1e-8", "--out", lasso_out}) == 0);

  const json rct_fit = load_json(rct_out);
  const json lasso_fit = load_json(lasso_out);
  CHECK(rct_fit["result"]["converged"].get<bool>());
  CHECK(lasso_fit["result"]["converged"].get<bool>());
  CHECK(support_of(rct_fit["result"]["beta"]) ==
        support_of(lasso_fit["result"]["beta"]));
  CHECK(rct_fit["config"]["method"] == "rct");
}

TEST_CASE("fit rejects a negative penalty with exit 1") {
  TempDir tmp;
  const std::string csv = tmp.path("d.csv");
  const Dataset d = testing::gaussian_instance(2, 10, 3);
  write_dataset_csv(csv, d.x, d.y);
  CHECK(run({"fit", "--data", csv, "--lambda", "-1", "--out",
             tmp.path("f.json")}) == 1);
}

TEST_CASE("fit on a missing input file exits 2") {
  TempDir tmp;
  CHECK(run({"fit", "--data", tmp.path("absent.csv"), "--out",
             tmp.path("f.json")}) == 2);
}

TEST_CASE("cv honors an explicit grid and a fixed threshold level") {
  TempDir tmp;
  const std::string csv = tmp.path("d.csv");
  const Dataset d = testing::gaussian_instance(27, 30, 6, 2, 0.3);
  write_dataset_csv(csv, d.x, d.y);

  const std::string out = tmp.path("cv.json");
  CHECK(run({"cv", "--data", csv, "--method", "rct", "--lambdas", "0.1",
             "--eta-rule", "fixed", "--eta", "0.2", "--folds", "3",
             "--max-iter", "400", "--tol", "1e-4", "--no-refit", "--workers",
             "1", "--out", out}) == 0);

  const json report = load_json(out);
  CHECK(report["command"] == "cv");
  REQUIRE(report["grid"].size() == 1);
  CHECK(report["best"]["lambda"].get<double>() == 0.1);
  CHECK(report["best"]["eta"].get<double>() == 0.2);
  CHECK_FALSE(report.contains("fit"));

  // With refit enabled the report carries the final coefficients.
  const std::string out2 = tmp.path("cv_refit.json");
  CHECK(run({"cv", "--data", csv, "--method", "rct", "--lambdas", "0.1",
             "--eta-rule", "fixed", "--eta", "0.2", "--folds", "3",
             "--max-iter", "400", "--tol", "1e-4", "--workers", "1", "--out",
             out2}) == 0);
  const json refit = load_json(out2);
  REQUIRE(refit.contains("fit"));
  CHECK(refit["fit"]["beta"].size() == 6);
}

TEST_CASE("cv rejects a single fold with exit 1") {
  TempDir tmp;
  const std::string csv = tmp.path("d.csv");
  const Dataset d = testing::gaussian_instance(4, 12, 4);
  write_dataset_csv(csv, d.x, d.y);
  CHECK(run({"cv", "--data", csv, "--folds", "1", "--lambdas", "0.1",
             "--eta-rule", "fixed", "--out", tmp.path("cv.json")}) == 1);
}

TEST_CASE("benchmark validates its request with exit 1") {
  TempDir tmp;
  const std::string csv = tmp.path("b.csv");
  const std::string js = tmp.path("b.json");
  CHECK(run({"benchmark", "--models", "1a", "--reps", "0", "--out-csv", csv,
             "--out-json", js}) == 1);
  CHECK(run({"benchmark", "--models", "1a", "--methods", "stgp", "--out-csv",
             csv, "--out-json", js}) == 1);
  CHECK(run({"benchmark", "--models", "x", "--out-csv", csv, "--out-json",
             js}) == 1);
}

TEST_CASE("a small benchmark produces the full table deterministically") {
  TempDir tmp;
  const std::string csv = tmp.path("bench.csv");
  const std::string js = tmp.path("bench.json");
  const std::vector<std::string> args{
      "benchmark",      "--models", "1a",   "--methods",
      "rct,lasso",      "--n",      "40",   "--p",
      "24",             "--reps",   "1",    "--seed",
      "3",              "--workers", "1",   "--folds",
      "3",              "--lambda-points",  "3",
      "--lambda-min-ratio", "0.2",  "--lasso-lambda-points", "4",
      "--cv-max-iter",  "800",      "--cv-tol", "1e-4",
      "--out-csv",      csv,        "--out-json", js};
  CHECK(run(args) == 0);

  const json report = load_json(js);
  CHECK(report["command"] == "benchmark");
  // Two computed rows plus five published baselines for this model.
  REQUIRE(report["rows"].size() == 7);
  CHECK(report["rows"][0]["source"] == "computed");
  CHECK(report["rows"][2]["source"] == "published");
  REQUIRE(report["records"].size() == 2);
  for (const json& record : report["records"]) {
    CHECK(record["ok"].get<bool>());
  }

  const std::string table = read_text_file(csv);
  CHECK(table.rfind("model,case,method,source,", 0) == 0);
  std::size_t lines = 0;
  for (char c : table) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 8);  // header + 7 rows

  const std::string csv_bytes = read_text_file(csv);
  const std::string json_bytes = read_text_file(js);
  CHECK(run(args) == 0);
  CHECK(read_text_file(csv) == csv_bytes);
  CHECK(read_text_file(js) == json_bytes);
}

TEST_CASE("check reports diagnostics and repeats byte-for-byte") {
  TempDir tmp;
  const std::string out = tmp.path("check.json");
  CHECK(run({"check", "--seed", "13", "--out", out}) == 0);
  const json report = load_json(out);
  CHECK(report["all_passed"].get<bool>());
  CHECK(report["results"].size() == 6);

  const std::string bytes = read_text_file(out);
  CHECK(run({"check", "--seed", "13", "--out", out}) == 0);
  CHECK(read_text_file(out) == bytes);
}
