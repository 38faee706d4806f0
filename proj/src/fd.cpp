#include "rct/fd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rct/common.hpp"

namespace rct {

double central_difference(const ScalarFn& f, double x, double step) {
  require(step > 0.0, "central_difference: step must be positive");
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

double ridders_derivative(const ScalarFn& f, double x, double h0,
                          double* error_estimate) {
  require(h0 > 0.0, "ridders_derivative: h0 must be positive");
  constexpr int kTableau = 13;
  constexpr double kCon = 1.4;
  constexpr double kCon2 = kCon * kCon;
  constexpr double kSafe = 2.0;

  double a[kTableau][kTableau];
  double h = h0;
  a[0][0] = (f(x + h) - f(x - h)) / (2.0 * h);
  double best = a[0][0];
  double err = std::numeric_limits<double>::max();

  for (int i = 1; i < kTableau; ++i) {
    h /= kCon;
    a[0][i] = (f(x + h) - f(x - h)) / (2.0 * h);
    double fac = kCon2;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
      fac *= kCon2;
      const double errt = std::max(std::abs(a[j][i] - a[j - 1][i]),
                                   std::abs(a[j][i] - a[j - 1][i - 1]));
      if (errt <= err) {
        err = errt;
        best = a[j][i];
      }
    }
    // Two successive diagonal entries far apart means higher orders only
    // add rounding noise.
    if (std::abs(a[i][i] - a[i - 1][i - 1]) >= kSafe * err) break;
  }
  if (error_estimate != nullptr) *error_estimate = err;
  return best;
}

}  // namespace rct
