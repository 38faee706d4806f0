#include "rct/datagen.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <string>

#include "rct/rng.hpp"

namespace rct {

std::vector<std::pair<double, double>> lattice_points(Index grid_side) {
  require(grid_side >= 2, "lattice_points: grid side must be at least 2");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(static_cast<std::size_t>(grid_side * grid_side));
  const double step = 2.0 / static_cast<double>(grid_side - 1);
  for (Index r = 0; r < grid_side; ++r) {
    for (Index c = 0; c < grid_side; ++c) {
      pts.emplace_back(-1.0 + step * static_cast<double>(c),
                       -1.0 + step * static_cast<double>(r));
    }
  }
  return pts;
}

namespace {

Matrix gp_kernel(const std::vector<std::pair<double, double>>& pts,
                 double scale) {
  const Index p = static_cast<Index>(pts.size());
  Matrix sigma(p, p);
  std::vector<double> sq(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    sq[i] = pts[i].first * pts[i].first + pts[i].second * pts[i].second;
  }
  for (Index i = 0; i < p; ++i) {
    for (Index j = 0; j <= i; ++j) {
      const double dx = pts[i].first - pts[j].first;
      const double dy = pts[i].second - pts[j].second;
      const double v = std::exp(-sq[i] - sq[j] - scale * (dx * dx + dy * dy));
      sigma(i, j) = v;
      sigma(j, i) = v;
    }
  }
  return sigma;
}

Index checked_grid_side(Index p, Index grid_side) {
  require(grid_side * grid_side == p,
          "lattice covariance: p must equal grid_side^2 (got p=" +
              std::to_string(p) + ", side=" + std::to_string(grid_side) + ")");
  return grid_side;
}

}  // namespace

Matrix build_covariance(const CovarianceSpec& spec, Index p) {
  require(p > 0, "build_covariance: p must be positive");
  if (const auto* ar1 = std::get_if<Ar1Spec>(&spec)) {
    require(std::abs(ar1->rho) < 1.0, "AR1: |rho| must be below 1");
    std::vector<double> pow(static_cast<std::size_t>(p), 1.0);
    for (Index k = 1; k < p; ++k) pow[k] = pow[k - 1] * ar1->rho;
    Matrix sigma(p, p);
    for (Index i = 0; i < p; ++i) {
      for (Index j = 0; j <= i; ++j) {
        sigma(i, j) = pow[i - j];
        sigma(j, i) = pow[i - j];
      }
    }
    return sigma;
  }
  if (const auto* cs = std::get_if<CsSpec>(&spec)) {
    require(cs->rho >= 0.0 && cs->rho < 1.0, "CS: rho must lie in [0, 1)");
    Matrix sigma = Matrix::Constant(p, p, cs->rho);
    sigma.diagonal().setOnes();
    return sigma;
  }
  if (const auto* gp = std::get_if<GpGridSpec>(&spec)) {
    require(gp->scale > 0.0, "GP kernel: scale must be positive");
    const Index side = checked_grid_side(p, gp->grid_side);
    return gp_kernel(lattice_points(side), gp->scale);
  }
  const auto& block = std::get<BlockGpSpec>(spec);
  require(block.scale > 0.0, "GP kernel: scale must be positive");
  const Index side = checked_grid_side(p, block.grid_side);
  Matrix sigma = gp_kernel(lattice_points(side), block.scale);
  const GroupPartition regions =
      GroupPartition::grid_regions(side, block.regions_per_side);
  std::vector<Index> region_of(static_cast<std::size_t>(p));
  for (Index b = 0; b < regions.block_count(); ++b) {
    for (Index j : regions.block(b)) region_of[j] = b;
  }
  for (Index i = 0; i < p; ++i) {
    for (Index j = 0; j < p; ++j) {
      if (region_of[i] != region_of[j]) sigma(i, j) = 0.0;
    }
  }
  return sigma;
}

CholeskyResult cholesky_factor(const Matrix& sigma) {
  require_shape(sigma.rows() == sigma.cols(), "cholesky_factor: square input");
  const double mean_diag = sigma.diagonal().mean();
  const double levels[] = {0.0, 1e-10, 1e-8, 1e-6};
  for (double level : levels) {
    const double jitter = level * mean_diag;
    Matrix boosted = sigma;
    boosted.diagonal().array() += jitter;
    Eigen::LLT<Matrix> llt(boosted);
    if (llt.info() == Eigen::Success) {
      return {llt.matrixL(), jitter};
    }
  }
  throw DecompositionError(
      "cholesky_factor: matrix not positive definite at maximum jitter");
}

namespace {

NoiseSpec model_noise(int model_id, const std::string& case_label) {
  NoiseSpec noise;
  int idx = 0;
  if (case_label == "a") {
    idx = 0;
  } else if (case_label == "b") {
    idx = 1;
  } else {
    require(case_label == "c", "model case must be a, b or c");
    idx = 2;
  }
  if (model_id <= 3) {
    const double s1[] = {1.0, 2.0, 3.0};
    noise.sigma1_sq = s1[idx];
    noise.sigma2_sq = 10.0;
  } else if (model_id <= 6) {
    const double s1[] = {0.1, 0.3, 1.0};
    noise.sigma1_sq = s1[idx];
    noise.sigma2_sq = 3.0;
  } else {
    const double s1[] = {2.0, 4.0, 8.0};
    noise.sigma1_sq = s1[idx];
    noise.sigma2_sq = 30.0;
  }
  return noise;
}

std::string describe_covariance(const CovarianceSpec& spec) {
  if (const auto* ar1 = std::get_if<Ar1Spec>(&spec)) {
    return "AR1(rho=" + std::to_string(ar1->rho) + ")";
  }
  if (const auto* cs = std::get_if<CsSpec>(&spec)) {
    return "CS(rho=" + std::to_string(cs->rho) + ")";
  }
  if (const auto* gp = std::get_if<GpGridSpec>(&spec)) {
    return "GPGrid(scale=" + std::to_string(gp->scale) + ")";
  }
  const auto& block = std::get<BlockGpSpec>(spec);
  return "BlockGP(scale=" + std::to_string(block.scale) +
         ", between_corr=" + std::to_string(block.between_corr) + ")";
}

std::string describe_noise(const NoiseSpec& noise) {
  return std::to_string(1.0 - noise.contamination) + "*N(0," +
         std::to_string(noise.sigma1_sq) + ") + " +
         std::to_string(noise.contamination) + "*N(0," +
         std::to_string(noise.sigma2_sq) + ")";
}

Index isqrt(Index p) {
  Index side = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(p))));
  while (side * side > p) --side;
  while ((side + 1) * (side + 1) <= p) ++side;
  return side;
}

// Truth vector for a recipe; consumes pattern-specific draws from rng.
Vector draw_truth(const CoefficientPattern& pattern, Index p, Index grid_side,
                  const GroupPartition* regions, Rng& rng) {
  Vector beta = Vector::Zero(p);
  if (const auto* head = std::get_if<DenseHeadPattern>(&pattern)) {
    require(head->count <= p, "dense-head pattern: count exceeds p");
    for (Index j = 0; j < head->count; ++j) beta[j] = head->value;
    return beta;
  }
  if (const auto* disk = std::get_if<DiskPattern>(&pattern)) {
    const auto pts = lattice_points(grid_side);
    const double r2 = disk->radius * disk->radius;
    // Redraw the center until the disk holds at least one lattice point.
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const double cx = rng.uniform(-0.5, 0.5);
      const double cy = rng.uniform(-0.5, 0.5);
      std::vector<Index> inside;
      for (Index j = 0; j < p; ++j) {
        const double dx = pts[j].first - cx;
        const double dy = pts[j].second - cy;
        if (dx * dx + dy * dy <= r2) inside.push_back(j);
      }
      if (inside.empty()) continue;
      for (Index j : inside) {
        beta[j] = rng.uniform(disk->value_lo, disk->value_hi);
      }
      return beta;
    }
    throw ParameterError("disk pattern: no lattice point ever fell inside");
  }
  const auto& rdisks = std::get<RegionDisksPattern>(pattern);
  require(regions != nullptr, "region-disk pattern requires a region partition");
  require(rdisks.count <= regions->block_count(),
          "region-disk pattern: more disks than regions");
  const auto pts = lattice_points(grid_side);
  // Sample `count` distinct regions without replacement.
  std::vector<Index> pool(static_cast<std::size_t>(regions->block_count()));
  for (std::size_t b = 0; b < pool.size(); ++b) pool[b] = static_cast<Index>(b);
  for (Index k = 0; k < rdisks.count; ++k) {
    const std::size_t pick =
        k + static_cast<std::size_t>(rng.below(pool.size() - k));
    std::swap(pool[k], pool[pick]);
  }
  const double r2 = rdisks.radius * rdisks.radius;
  for (Index k = 0; k < rdisks.count; ++k) {
    const auto& block = regions->block(pool[k]);
    double cx = 0.0, cy = 0.0;
    for (Index j : block) {
      cx += pts[j].first;
      cy += pts[j].second;
    }
    cx /= static_cast<double>(block.size());
    cy /= static_cast<double>(block.size());
    for (Index j : block) {
      const double dx = pts[j].first - cx;
      const double dy = pts[j].second - cy;
      if (dx * dx + dy * dy <= r2) beta[j] = rdisks.value;
    }
  }
  return beta;
}

}  // namespace

GenerationSpec model_library(int model_id, const std::string& case_label) {
  GenerationSpec spec;
  spec.noise = model_noise(model_id, case_label);
  switch (model_id) {
    case 1: spec.covariance = Ar1Spec{0.5}; break;
    case 2: spec.covariance = Ar1Spec{0.6}; break;
    case 3: spec.covariance = Ar1Spec{0.7}; break;
    case 4: spec.covariance = CsSpec{0.4}; break;
    case 5: spec.covariance = CsSpec{0.5}; break;
    case 6: spec.covariance = CsSpec{0.6}; break;
    case 7: spec.covariance = GpGridSpec{10.0, 50}; break;
    case 8: spec.covariance = GpGridSpec{5.0, 50}; break;
    case 9: spec.covariance = BlockGpSpec{10.0, 50, 5, 0.9}; break;
    case 10: spec.covariance = BlockGpSpec{5.0, 50, 5, 0.9}; break;
    default:
      throw ParameterError("model id must lie in 1..10, got " +
                           std::to_string(model_id));
  }
  if (model_id <= 6) {
    spec.pattern = DenseHeadPattern{};
  } else if (model_id <= 8) {
    spec.pattern = DiskPattern{};
  } else {
    spec.pattern = RegionDisksPattern{};
  }
  return spec;
}

Dataset sample_from_spec(const GenerationSpec& spec, Index n, Index p,
                         std::uint64_t seed) {
  require(n > 0 && p > 0, "sample: n and p must be positive");
  spec.noise.validate();

  // Lattice-based specs carry their own side; trust p to pick it so the
  // same recipe scales to smaller grids.
  CovarianceSpec cov = spec.covariance;
  Index grid_side = 0;
  const GroupPartition* regions_ptr = nullptr;
  GroupPartition regions;
  if (auto* gp = std::get_if<GpGridSpec>(&cov)) {
    gp->grid_side = isqrt(p);
    grid_side = gp->grid_side;
  } else if (auto* block = std::get_if<BlockGpSpec>(&cov)) {
    block->grid_side = isqrt(p);
    grid_side = block->grid_side;
    regions = GroupPartition::grid_regions(grid_side, block->regions_per_side);
    regions_ptr = &regions;
  }

  const Matrix sigma = build_covariance(cov, p);
  const CholeskyResult chol = cholesky_factor(sigma);

  Rng rng(seed);
  Vector truth = draw_truth(spec.pattern, p, grid_side, regions_ptr, rng);

  // Standard normal block, rows drawn in observation-major order.
  Matrix z(n, p);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < p; ++j) z(i, j) = rng.normal();
  }
  Matrix x = z * chol.lower.transpose();

  if (const auto* block = std::get_if<BlockGpSpec>(&cov)) {
    // Shared region means: every coordinate of region b in row i is
    // shifted by mu_i[b], mu_i ~ N(0, Gamma),
    // Gamma = between_corr + (1 - between_corr) * I.
    const Index nb = regions.block_count();
    Matrix gamma = Matrix::Constant(nb, nb, block->between_corr);
    gamma.diagonal().setOnes();
    const CholeskyResult gamma_chol = cholesky_factor(gamma);
    Vector w(nb), mu(nb);
    for (Index i = 0; i < n; ++i) {
      for (Index b = 0; b < nb; ++b) w[b] = rng.normal();
      mu = gamma_chol.lower * w;
      for (Index b = 0; b < nb; ++b) {
        for (Index j : regions.block(b)) x(i, j) += mu[b];
      }
    }
  }

  const double sd1 = std::sqrt(spec.noise.sigma1_sq);
  const double sd2 = std::sqrt(spec.noise.sigma2_sq);
  Vector y = x * truth;
  for (Index i = 0; i < n; ++i) {
    const double sd = rng.bernoulli(spec.noise.contamination) ? sd2 : sd1;
    y[i] += sd * rng.normal();
  }

  Dataset data;
  data.x = std::move(x);
  data.y = std::move(y);
  data.truth = std::move(truth);
  if (regions_ptr != nullptr) data.groups = regions;
  data.meta.seed = seed;
  data.meta.covariance = describe_covariance(cov);
  data.meta.noise = describe_noise(spec.noise);
  data.meta.jitter = chol.jitter;
  return data;
}

Dataset sample_dataset(int model_id, const std::string& case_label, Index n,
                       Index p, std::uint64_t seed) {
  Dataset data = sample_from_spec(model_library(model_id, case_label), n, p, seed);
  data.meta.model_id = model_id;
  data.meta.case_label = case_label;
  return data;
}

}  // namespace rct
