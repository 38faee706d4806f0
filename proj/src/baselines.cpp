#include "rct/baselines.hpp"

#include <cmath>

namespace rct {

namespace {

// Top eigenvalue of X^T X / n by 100 power-iteration steps from a
// deterministic start vector.
double lipschitz_estimate(const Matrix& x) {
  const double inv_n = 1.0 / static_cast<double>(x.rows());
  Vector v = Vector::Ones(x.cols()).normalized();
  double value = 0.0;
  for (int it = 0; it < 100; ++it) {
    Vector w = (x.transpose() * (x * v)) * inv_n;
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    value = v.dot(w);
    v = w / norm;
  }
  return value;
}

double soft(double v, double t) {
  if (v > t) return v - t;
  if (v < -t) return v + t;
  return 0.0;
}

// Max-norm of the minimum-norm subgradient of the weighted lasso objective.
double lasso_stationarity(const Vector& grad, const Vector& beta,
                          const Vector& thresholds) {
  double worst = 0.0;
  for (Index j = 0; j < beta.size(); ++j) {
    double r;
    if (beta[j] != 0.0) {
      r = std::abs(grad[j] + (beta[j] > 0.0 ? thresholds[j] : -thresholds[j]));
    } else {
      r = std::max(0.0, std::abs(grad[j]) - thresholds[j]);
    }
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace

double lasso_lambda_max(const Dataset& data,
                        const std::optional<Vector>& weights) {
  data.validate();
  const Vector g = data.x.transpose() * data.y / static_cast<double>(data.n());
  if (!weights) return g.cwiseAbs().maxCoeff();
  require_shape(weights->size() == data.p(),
                "lasso_lambda_max: weight length mismatch");
  double best = 0.0;
  for (Index j = 0; j < g.size(); ++j) {
    require((*weights)[j] > 0.0, "lasso_lambda_max: weights must be positive");
    best = std::max(best, std::abs(g[j]) / (*weights)[j]);
  }
  return best;
}

Vector adaptive_weights(const Vector& pilot) {
  Vector w(pilot.size());
  for (Index j = 0; j < pilot.size(); ++j) {
    w[j] = 1.0 / (std::abs(pilot[j]) + 1e-6);
  }
  return w;
}

LassoFit fit_lasso(const Dataset& data, double lambda,
                   const LassoConfig& config) {
  data.validate();
  require(lambda >= 0.0, "fit_lasso: lambda must be nonnegative");
  require(config.tol > 0.0, "fit_lasso: tol must be positive");
  require(config.max_iter >= 1, "fit_lasso: max_iter must be at least 1");

  const Index n = data.n();
  const Index p = data.p();
  const double inv_n = 1.0 / static_cast<double>(n);

  Vector thresholds = Vector::Constant(p, lambda);
  if (config.weights) {
    require_shape(config.weights->size() == p,
                  "fit_lasso: weight length mismatch");
    thresholds = lambda * (*config.weights);
  }

  const double lip = lipschitz_estimate(data.x);
  const double step = lip > 0.0 ? 1.0 / lip : 1.0;

  Vector beta = Vector::Zero(p);
  if (config.init) {
    require_shape(config.init->size() == p, "fit_lasso: init length mismatch");
    beta = *config.init;
  }

  LassoFit fit;
  fit.step = step;
  Vector grad(p);
  for (int k = 0;; ++k) {
    grad = data.x.transpose() * (data.x * beta - data.y) * inv_n;
    if (lasso_stationarity(grad, beta, thresholds) <= config.tol) {
      fit.iterations = k;
      fit.converged = true;
      break;
    }
    if (k >= config.max_iter) {
      fit.iterations = k;
      fit.converged = false;
      break;
    }
    for (Index j = 0; j < p; ++j) {
      beta[j] = soft(beta[j] - step * grad[j], step * thresholds[j]);
    }
  }
  fit.beta = std::move(beta);
  return fit;
}

LassoFit fit_adaptive_lasso(const Dataset& data, double lambda,
                            const Vector& pilot, LassoConfig config) {
  require_shape(pilot.size() == data.p(),
                "fit_adaptive_lasso: pilot length mismatch");
  config.weights = adaptive_weights(pilot);
  return fit_lasso(data, lambda, config);
}

}  // namespace rct
