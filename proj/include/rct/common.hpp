#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace rct {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument values (non-positive scales, bad grids, ...).
struct ParameterError : Error {
  using Error::Error;
};

// Dimension mismatches between vectors, matrices and partitions.
struct ShapeError : Error {
  using Error::Error;
};

// Malformed text inputs (CSV cells, group files, config files).
struct FormatError : Error {
  using Error::Error;
};

// Filesystem problems: missing inputs, unwritable outputs.
struct IoError : Error {
  using Error::Error;
};

// Iterates produced a non-finite objective.
struct DivergenceError : Error {
  using Error::Error;
};

// Covariance factorization failed even at the maximum jitter level.
struct DecompositionError : Error {
  using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ParameterError(msg);
}

inline void require_shape(bool cond, const std::string& msg) {
  if (!cond) throw ShapeError(msg);
}

}  // namespace rct
