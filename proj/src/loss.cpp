#include "rct/loss.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace rct {

double pseudo_huber(double a, const HuberParams& p) {
  p.validate();
  const double s = a / p.omega;
  return a * a / (std::sqrt(1.0 + s * s) + 1.0);
}

double pseudo_huber_deriv(double a, const HuberParams& p) {
  p.validate();
  const double s = a / p.omega;
  return a / std::sqrt(1.0 + s * s);
}

double irls_weight(double r, const HuberParams& p) {
  p.validate();
  const double s = r / p.omega;
  return 1.0 / std::sqrt(1.0 + s * s);
}

namespace {

double median_inplace(std::vector<double>& v) {
  const std::size_t n = v.size();
  auto mid = v.begin() + n / 2;
  std::nth_element(v.begin(), mid, v.end());
  if (n % 2 == 1) return *mid;
  const double hi = *mid;
  const double lo = *std::max_element(v.begin(), mid);
  return 0.5 * (lo + hi);
}

}  // namespace

double mad_scale(const Vector& y) {
  require(y.size() > 0, "mad_scale: empty response");
  std::vector<double> work(y.data(), y.data() + y.size());
  const double med = median_inplace(work);
  for (double& v : work) v = std::abs(v - med);
  return median_inplace(work) / 0.6745;
}

HuberParams default_huber(const Vector& y) {
  double scale = mad_scale(y);
  if (!(scale > 0.0)) {
    const double mean = y.mean();
    scale = std::sqrt((y.array() - mean).square().sum() /
                      std::max<Index>(1, y.size() - 1));
  }
  if (!(scale > 0.0)) scale = 1.0;
  return HuberParams{1.345 * scale};
}

}  // namespace rct
