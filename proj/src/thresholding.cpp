#include "rct/thresholding.hpp"

#include <cmath>
#include <numbers>

namespace rct {

namespace {
constexpr double kInvPi = 1.0 / std::numbers::pi;
}

double h_step(double w, double tau) {
  require(tau > 0.0, "h_step: tau must be positive");
  return 0.5 + std::atan(w / tau) * kInvPi;
}

double h_step_deriv(double w, double tau) {
  require(tau > 0.0, "h_step_deriv: tau must be positive");
  return kInvPi * tau / (tau * tau + w * w);
}

double g_weight(double u, const ThresholdParams& p) {
  p.validate();
  return h_step(u - p.eta, p.tau) + h_step(-u - p.eta, p.tau);
}

double g_weight_deriv(double u, const ThresholdParams& p) {
  p.validate();
  return h_step_deriv(u - p.eta, p.tau) - h_step_deriv(-u - p.eta, p.tau);
}

Vector apply_G(const Vector& beta, const ThresholdParams& p) {
  p.validate();
  Vector out(beta.size());
  for (Index j = 0; j < beta.size(); ++j) {
    out[j] = beta[j] * g_weight(beta[j], p);
  }
  return out;
}

Vector dG_diag(const Vector& beta, const ThresholdParams& p) {
  p.validate();
  Vector out(beta.size());
  for (Index j = 0; j < beta.size(); ++j) {
    out[j] = g_weight(beta[j], p) + beta[j] * g_weight_deriv(beta[j], p);
  }
  return out;
}

double invert_G_scalar(double v, const ThresholdParams& p) {
  p.validate();
  if (v == 0.0) return 0.0;
  const double target = std::abs(v);
  auto G = [&](double u) { return u * g_weight(u, p); };

  // u * g(u) is odd and strictly increasing with |G(u)| <= |u|, so the
  // root for target > 0 lies in [0, hi] once G(hi) >= target.
  double lo = 0.0;
  double hi = std::max(target, 1.0);
  while (G(hi) < target) {
    lo = hi;
    hi *= 2.0;
    require(std::isfinite(hi), "invert_G_scalar: bracket expansion failed");
  }

  const double tol = 1e-10 * std::max(1.0, target);
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double val = G(mid);
    if (std::abs(val - target) <= tol) break;
    if (val < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return v > 0.0 ? mid : -mid;
}

}  // namespace rct
