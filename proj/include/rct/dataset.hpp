#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rct/common.hpp"
#include "rct/penalty.hpp"

namespace rct {

// Free-form generation record carried alongside simulated data.
struct DatasetMeta {
  int model_id = 0;          // 0 when the data did not come from the model library
  std::string case_label;    // "a" | "b" | "c" for library models
  std::uint64_t seed = 0;
  std::string covariance;    // human-readable covariance description
  std::string noise;         // human-readable noise description
  double jitter = 0.0;       // diagonal jitter used by the factorization
};

// Regression sample.  truth and groups are present for simulated data;
// groups may also be attached to external data before fitting.
struct Dataset {
  Matrix x;  // n rows (observations) by p columns (predictors)
  Vector y;  // length n

  std::optional<Vector> truth;
  std::optional<GroupPartition> groups;
  DatasetMeta meta;

  Index n() const { return x.rows(); }
  Index p() const { return x.cols(); }

  void validate() const {
    require_shape(x.rows() == y.size(), "dataset: row/response count mismatch");
    require_shape(x.rows() > 0 && x.cols() > 0, "dataset: empty design");
    if (truth) {
      require_shape(truth->size() == x.cols(),
                    "dataset: truth length does not match predictor count");
    }
    if (groups) {
      require_shape(groups->dimension() == x.cols(),
                    "dataset: partition does not match predictor count");
    }
  }
};

}  // namespace rct
