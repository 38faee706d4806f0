#pragma once

#include "rct/dataset.hpp"
#include "rct/loss.hpp"
#include "rct/thresholding.hpp"

namespace rct {

// Mean pseudo-Huber loss of the residuals y - X * G(beta).
double empirical_risk(const Dataset& data, const Vector& beta,
                      const ThresholdParams& thresh, const HuberParams& huber);

// Gradient of empirical_risk:
//   (1/n) * sum_i L'(<x_i, G(beta)> - y_i) * (x_i .* dG_diag(beta)).
Vector empirical_gradient(const Dataset& data, const Vector& beta,
                          const ThresholdParams& thresh,
                          const HuberParams& huber);

// Shared residual pass: returns the risk and writes the gradient.
// One multiply by X and one by X^T per call.
double risk_and_gradient(const Dataset& data, const Vector& beta,
                         const ThresholdParams& thresh,
                         const HuberParams& huber, Vector& grad_out);

// Norm of the minimum-norm subgradient of risk + lambda * group norms:
//   sqrt( sum_{b: beta_b != 0} ||grad_b + lambda * beta_b / ||beta_b|| ||^2
//       + sum_{b: beta_b == 0} max(0, ||grad_b|| - lambda)^2 ).
double stationarity_norm(const Vector& grad, const Vector& beta,
                         const GroupPartition& groups, double lambda);

// Forward-difference curvature probe along a unit direction:
//   <v, grad(beta + eps v) - grad(beta)> / eps.
// Precondition: ||v|| = 1 within 1e-8.
double directional_curvature(const Dataset& data, const Vector& beta,
                             const Vector& v, double eps,
                             const ThresholdParams& thresh,
                             const HuberParams& huber);

}  // namespace rct
