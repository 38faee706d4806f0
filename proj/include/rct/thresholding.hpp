#pragma once

#include "rct/common.hpp"

namespace rct {

// Smoothing/threshold pair for the coefficient weight map.
// tau controls the sharpness of the smoothed step, eta is the magnitude
// below which coefficients are (softly) suppressed.
struct ThresholdParams {
  double tau = 0.01;
  double eta = 0.0;

  void validate() const {
    require(tau > 0.0, "threshold smoothing tau must be positive");
    require(eta >= 0.0, "threshold level eta must be nonnegative");
  }
};

// Smoothed unit step h(w) = 1/2 + arctan(w / tau) / pi.
// Strictly increasing, h(0) = 1/2, limits 0 and 1 at -/+ infinity.
double h_step(double w, double tau);

// Derivative of h_step in w: (1/pi) * tau / (tau^2 + w^2).
double h_step_deriv(double w, double tau);

// Two-sided weight g(u) = h(u - eta) + h(-u - eta).
// Even in u, values in (0, 1); g == 1 identically when eta == 0.
double g_weight(double u, const ThresholdParams& p);

// Derivative of g_weight in u: h'(u - eta) - h'(-u - eta).  Odd in u.
double g_weight_deriv(double u, const ThresholdParams& p);

// Coefficient map G(beta): componentwise beta_j * g(beta_j).
Vector apply_G(const Vector& beta, const ThresholdParams& p);

// Diagonal of the Jacobian of G: g(beta_j) + beta_j * g'(beta_j).
Vector dG_diag(const Vector& beta, const ThresholdParams& p);

// Inverse of the scalar map u -> u * g(u), solved by bisection.
// Postcondition: |result * g(result) - v| <= 1e-10 * max(1, |v|).
double invert_G_scalar(double v, const ThresholdParams& p);

}  // namespace rct
