#pragma once

#include "rct/common.hpp"

namespace rct {

// Pseudo-Huber scale.  Quadratic for |a| << omega, linear growth with
// slope omega for |a| >> omega.
struct HuberParams {
  double omega = 1.0;

  void validate() const {
    require(omega > 0.0, "loss scale omega must be positive");
  }
};

// L(a) = omega^2 * (sqrt(1 + (a/omega)^2) - 1), evaluated in the
// cancellation-free form a^2 / (sqrt(1 + (a/omega)^2) + 1).
double pseudo_huber(double a, const HuberParams& p);

// L'(a) = a / sqrt(1 + (a/omega)^2).  Odd, bounded by omega.
double pseudo_huber_deriv(double a, const HuberParams& p);

// IRLS weight L'(r) / r = 1 / sqrt(1 + (r/omega)^2); equals 1 at r = 0.
double irls_weight(double r, const HuberParams& p);

// Robust residual scale: median(|y - median(y)|) / 0.6745.
double mad_scale(const Vector& y);

// Default loss scale 1.345 * mad_scale(y).  Falls back to the standard
// deviation, then to 1, when the response is (nearly) degenerate.
HuberParams default_huber(const Vector& y);

}  // namespace rct
