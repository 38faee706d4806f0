#pragma once

#include <optional>

#include "rct/dataset.hpp"

namespace rct {

struct LassoConfig {
  double tol = 1e-7;   // max-norm of the minimum-norm subgradient
  int max_iter = 50000;
  std::optional<Vector> init;     // absent: all zeros
  std::optional<Vector> weights;  // per-coordinate penalty multipliers
};

struct LassoFit {
  Vector beta;
  int iterations = 0;
  bool converged = false;
  double step = 0.0;  // 1 / L actually used
};

// Proximal gradient descent on (1/2n)||y - X beta||^2 + lambda ||w .* beta||_1
// with step 1 / L, where L estimates the top eigenvalue of X^T X / n by
// 100 power-iteration steps.  Zeros are exact (written by the prox).
LassoFit fit_lasso(const Dataset& data, double lambda,
                   const LassoConfig& config = {});

// Lasso with weights 1 / (|pilot_j| + 1e-6).
LassoFit fit_adaptive_lasso(const Dataset& data, double lambda,
                            const Vector& pilot, LassoConfig config = {});

// Smallest lambda with an all-zero solution: max_j |X^T y / n|_j / w_j.
double lasso_lambda_max(const Dataset& data,
                        const std::optional<Vector>& weights = std::nullopt);

// Adaptive-lasso penalty multipliers.
Vector adaptive_weights(const Vector& pilot);

}  // namespace rct
