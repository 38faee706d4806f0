#pragma once

#include <functional>

namespace rct {

using ScalarFn = std::function<double(double)>;

// Plain central difference (f(x+h) - f(x-h)) / 2h.
double central_difference(const ScalarFn& f, double x, double step);

// Ridders' extrapolated central difference.  Builds a Neville tableau over
// steps h0, h0/1.4, h0/1.4^2, ... and returns the entry with the smallest
// internal error estimate, stopping once rounding noise takes over.  Pick
// h0 below the distance to the nearest non-smooth feature of f.
double ridders_derivative(const ScalarFn& f, double x, double h0 = 1e-2,
                          double* error_estimate = nullptr);

}  // namespace rct
