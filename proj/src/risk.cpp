#include "rct/risk.hpp"

#include <cmath>

namespace rct {

double empirical_risk(const Dataset& data, const Vector& beta,
                      const ThresholdParams& thresh, const HuberParams& huber) {
  data.validate();
  require_shape(beta.size() == data.p(), "empirical_risk: beta length mismatch");
  const Vector resid = data.x * apply_G(beta, thresh) - data.y;
  double total = 0.0;
  for (Index i = 0; i < resid.size(); ++i) {
    total += pseudo_huber(resid[i], huber);
  }
  return total / static_cast<double>(data.n());
}

double risk_and_gradient(const Dataset& data, const Vector& beta,
                         const ThresholdParams& thresh,
                         const HuberParams& huber, Vector& grad_out) {
  data.validate();
  require_shape(beta.size() == data.p(),
                "risk_and_gradient: beta length mismatch");
  const double inv_n = 1.0 / static_cast<double>(data.n());
  Vector resid = data.x * apply_G(beta, thresh) - data.y;
  double total = 0.0;
  for (Index i = 0; i < resid.size(); ++i) {
    total += pseudo_huber(resid[i], huber);
    resid[i] = pseudo_huber_deriv(resid[i], huber) * inv_n;
  }
  grad_out = (data.x.transpose() * resid).cwiseProduct(dG_diag(beta, thresh));
  return total * inv_n;
}

Vector empirical_gradient(const Dataset& data, const Vector& beta,
                          const ThresholdParams& thresh,
                          const HuberParams& huber) {
  Vector grad;
  risk_and_gradient(data, beta, thresh, huber, grad);
  return grad;
}

double stationarity_norm(const Vector& grad, const Vector& beta,
                         const GroupPartition& groups, double lambda) {
  require(lambda >= 0.0, "stationarity_norm: lambda must be nonnegative");
  require_shape(grad.size() == beta.size() &&
                    beta.size() == groups.dimension(),
                "stationarity_norm: dimension mismatch");
  double total = 0.0;
  for (Index b = 0; b < groups.block_count(); ++b) {
    const double beta_norm = groups.block_norm(beta, b);
    if (beta_norm > 0.0) {
      double sq = 0.0;
      for (Index j : groups.block(b)) {
        const double c = grad[j] + lambda * beta[j] / beta_norm;
        sq += c * c;
      }
      total += sq;
    } else {
      const double slack = groups.block_norm(grad, b) - lambda;
      if (slack > 0.0) total += slack * slack;
    }
  }
  return std::sqrt(total);
}

double directional_curvature(const Dataset& data, const Vector& beta,
                             const Vector& v, double eps,
                             const ThresholdParams& thresh,
                             const HuberParams& huber) {
  require(eps > 0.0, "directional_curvature: eps must be positive");
  require_shape(v.size() == beta.size(),
                "directional_curvature: direction length mismatch");
  require(std::abs(v.norm() - 1.0) <= 1e-8,
          "directional_curvature: direction must have unit norm");
  const Vector g0 = empirical_gradient(data, beta, thresh, huber);
  const Vector g1 = empirical_gradient(data, beta + eps * v, thresh, huber);
  return v.dot(g1 - g0) / eps;
}

}  // namespace rct
