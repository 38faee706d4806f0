#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "rct/dataset.hpp"

namespace rct {

// sigma_ij = rho^|i-j|.
struct Ar1Spec {
  double rho = 0.5;
};

// sigma_ij = rho + (1 - rho) * I(i == j).
struct CsSpec {
  double rho = 0.4;
};

// Coordinates sit on a grid_side x grid_side row-major lattice over
// [-1,1]^2; sigma_ij = exp(-||s_i||^2 - ||s_j||^2 - scale * ||s_i - s_j||^2).
struct GpGridSpec {
  double scale = 10.0;
  Index grid_side = 50;
};

// Same lattice kernel restricted to square regions (block diagonal);
// between-region dependence is injected when sampling, through region
// means with cross-correlation between_corr.
struct BlockGpSpec {
  double scale = 10.0;
  Index grid_side = 50;
  Index regions_per_side = 5;
  double between_corr = 0.9;
};

using CovarianceSpec = std::variant<Ar1Spec, CsSpec, GpGridSpec, BlockGpSpec>;

// Two-component Gaussian mixture: N(0, sigma1_sq) with probability
// 1 - contamination, N(0, sigma2_sq) with probability contamination.
struct NoiseSpec {
  double sigma1_sq = 1.0;
  double sigma2_sq = 10.0;
  double contamination = 0.1;

  void validate() const {
    require(sigma1_sq > 0.0 && sigma2_sq > 0.0,
            "noise: variances must be positive");
    require(contamination >= 0.0 && contamination <= 1.0,
            "noise: contamination must lie in [0, 1]");
  }
};

// First `count` coordinates set to `value`, the rest zero.
struct DenseHeadPattern {
  Index count = 20;
  double value = 1.0;
};

// Lattice points within `radius` of a center drawn uniformly from
// [-0.5, 0.5]^2 get values drawn uniformly from [value_lo, value_hi].
struct DiskPattern {
  double radius = 0.1;
  double value_lo = 0.5;
  double value_hi = 1.0;
};

// `count` distinct regions drawn at random; inside each, lattice points
// within `radius` of the region center get `value`.
struct RegionDisksPattern {
  Index count = 2;
  double radius = 0.13;
  double value = 2.0;
};

using CoefficientPattern =
    std::variant<DenseHeadPattern, DiskPattern, RegionDisksPattern>;

// Row-major lattice coordinates over [-1,1]^2.
std::vector<std::pair<double, double>> lattice_points(Index grid_side);

// Dense covariance for the given spec and dimension p.
// For the lattice specs p must equal grid_side^2.
Matrix build_covariance(const CovarianceSpec& spec, Index p);

struct CholeskyResult {
  Matrix lower;
  double jitter = 0.0;  // diagonal boost that made the factorization succeed
};

// Lower Cholesky factor with escalating diagonal jitter
// {0, 1e-10, 1e-8, 1e-6} * mean(diag).  Throws DecompositionError if the
// matrix is still not positive definite at the largest jitter.
CholeskyResult cholesky_factor(const Matrix& sigma);

// Full generative recipe for one simulated dataset.
struct GenerationSpec {
  CovarianceSpec covariance;
  NoiseSpec noise;
  CoefficientPattern pattern;
};

// Library of benchmark models 1..10, cases "a" | "b" | "c".
GenerationSpec model_library(int model_id, const std::string& case_label);

// Deterministic sampling: one dataset per (model, case, n, p, seed).
// Draw order is fixed, so equal arguments give bitwise-equal data.
Dataset sample_dataset(int model_id, const std::string& case_label, Index n,
                       Index p, std::uint64_t seed);

// Same, for a custom recipe.
Dataset sample_from_spec(const GenerationSpec& spec, Index n, Index p,
                         std::uint64_t seed);

}  // namespace rct
