#include <cmath>

#include "doctest.h"
#include "rct/risk.hpp"
#include "rct/rng.hpp"
#include "test_support.hpp"

using namespace rct;

namespace {

// Straight-line reimplementation: explicit loops, no linear algebra, no
// shared code with the production risk path.
double naive_risk(const Dataset& d, const Vector& beta,
                  const ThresholdParams& t, const HuberParams& h) {
  double total = 0.0;
  for (Index i = 0; i < d.n(); ++i) {
    double fit = 0.0;
    for (Index j = 0; j < d.p(); ++j) {
      const double b = beta[j];
      const double g = h_step(b - t.eta, t.tau) + h_step(-b - t.eta, t.tau);
      fit += d.x(i, j) * b * g;
    }
    const double a = d.y[i] - fit;
    total += h.omega * h.omega * (std::sqrt(1.0 + (a / h.omega) * (a / h.omega)) - 1.0);
  }
  return total / static_cast<double>(d.n());
}

}  // namespace

TEST_CASE("empirical_risk matches a naive loop implementation") {
  const ThresholdParams thresh{0.02, 0.3};
  const HuberParams huber{1.2};
  Rng rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    Dataset d = testing::gaussian_instance(300 + trial, 15, 9);
    Vector beta(9);
    for (Index j = 0; j < 9; ++j) beta[j] = rng.uniform(-2.0, 2.0);
    const double fast = empirical_risk(d, beta, thresh, huber);
    const double slow = naive_risk(d, beta, thresh, huber);
    CHECK(fast == doctest::Approx(slow).scale(0.0).epsilon(1e-12));
  }
}

TEST_CASE("empirical_gradient matches central finite differences") {
  const ThresholdParams thresh{0.02, 0.3};
  const HuberParams huber{1.0};
  Dataset d = testing::gaussian_instance(77, 12, 8);
  Vector beta(8);
  beta << 0.9, -0.02, 0.31, 0.0, -1.4, 0.25, 0.28, 0.05;

  const Vector grad = empirical_gradient(d, beta, thresh, huber);
  const double step = 1e-6;
  for (Index j = 0; j < 8; ++j) {
    Vector hi = beta, lo = beta;
    hi[j] += step;
    lo[j] -= step;
    const double fd = (empirical_risk(d, hi, thresh, huber) -
                       empirical_risk(d, lo, thresh, huber)) / (2.0 * step);
    CHECK(grad[j] == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("risk_and_gradient agrees with the separate calls") {
  const ThresholdParams thresh{0.05, 0.1};
  const HuberParams huber{2.0};
  Dataset d = testing::gaussian_instance(5, 20, 6);
  Vector beta(6);
  beta << 0.5, 0.0, -0.7, 0.11, 0.09, -2.0;

  Vector grad(6);
  const double risk = risk_and_gradient(d, beta, thresh, huber, grad);
  CHECK(risk == doctest::Approx(empirical_risk(d, beta, thresh, huber))
                    .scale(0.0)
                    .epsilon(1e-14));
  const Vector grad_ref = empirical_gradient(d, beta, thresh, huber);
  for (Index j = 0; j < 6; ++j) {
    CHECK(grad[j] == doctest::Approx(grad_ref[j]).epsilon(1e-14));
  }
}

TEST_CASE("stationarity_norm handles zero and active blocks") {
  const GroupPartition groups({{0}, {1}}, 2);
  const double lambda = 1.0;

  // At beta = 0 the subdifferential is the lambda-ball; only the excess
  // of ||grad_b|| over lambda counts.
  Vector beta = Vector::Zero(2);
  Vector grad(2);
  grad << 2.0 * lambda, 0.5 * lambda;
  // max(0, 2 - 1) = 1 on block 0, max(0, 0.5 - 1) = 0 on block 1.
  CHECK(stationarity_norm(grad, beta, groups, lambda) ==
        doctest::Approx(1.0).epsilon(1e-15));

  // Active block at its stationary point: grad = -lambda * beta/||beta||.
  Vector active(2);
  active << 3.0, 0.0;
  Vector g2(2);
  g2 << -lambda, 0.0;
  CHECK(stationarity_norm(g2, active, groups, lambda) ==
        doctest::Approx(0.0).epsilon(1e-15));

  // Off-stationary active block measures the full residual.
  Vector g3(2);
  g3 << -lambda + 0.25, 0.0;
  CHECK(stationarity_norm(g3, active, groups, lambda) ==
        doctest::Approx(0.25).epsilon(1e-13));

  // Multi-coordinate block.
  const GroupPartition whole({{0, 1}}, 2);
  Vector b4(2);
  b4 << 3.0, 4.0;
  Vector g4(2);
  g4 << -0.6 * lambda, -0.8 * lambda;  // exactly -lambda * b/||b||
  CHECK(stationarity_norm(g4, b4, whole, lambda) ==
        doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("directional_curvature approximates the quadratic form") {
  // With eta = 0 and a huge omega the model is ordinary least squares, so
  // the Hessian is X^T X / n and the probe must reproduce v' H v.
  const ThresholdParams thresh{0.01, 0.0};
  const HuberParams huber{1e8};
  Dataset d = testing::gaussian_instance(9, 40, 5);

  Vector beta(5);
  beta << 0.2, -0.1, 0.4, 0.0, 0.3;
  Vector v(5);
  v << 1.0, 2.0, -1.0, 0.5, 0.25;
  v.normalize();

  const double probe = directional_curvature(d, beta, v, 1e-5, thresh, huber);
  const Matrix hessian = d.x.transpose() * d.x / static_cast<double>(d.n());
  const double exact = v.dot(hessian * v);
  CHECK(probe == doctest::Approx(exact).epsilon(1e-5));

  Vector not_unit = 2.0 * v;
  CHECK_THROWS_AS(
      directional_curvature(d, beta, not_unit, 1e-5, thresh, huber),
      ParameterError);
}
