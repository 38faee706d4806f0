#include "rct/penalty.hpp"

#include <cmath>
#include <string>

namespace rct {

GroupPartition::GroupPartition(std::vector<std::vector<Index>> blocks,
                               Index dimension)
    : blocks_(std::move(blocks)), dimension_(dimension) {
  require(dimension_ > 0, "partition dimension must be positive");
  std::vector<char> seen(static_cast<std::size_t>(dimension_), 0);
  Index covered = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    require(!blocks_[b].empty(),
            "partition block " + std::to_string(b) + " is empty");
    for (Index j : blocks_[b]) {
      require(j >= 0 && j < dimension_,
              "partition index " + std::to_string(j) + " out of range");
      require(!seen[static_cast<std::size_t>(j)],
              "partition index " + std::to_string(j) + " repeated");
      seen[static_cast<std::size_t>(j)] = 1;
      ++covered;
    }
  }
  require(covered == dimension_, "partition does not cover every coordinate");
}

GroupPartition GroupPartition::singletons(Index dimension) {
  std::vector<std::vector<Index>> blocks;
  blocks.reserve(static_cast<std::size_t>(dimension));
  for (Index j = 0; j < dimension; ++j) blocks.push_back({j});
  return GroupPartition(std::move(blocks), dimension);
}

GroupPartition GroupPartition::grid_regions(Index side, Index regions_per_side) {
  require(side > 0 && regions_per_side > 0,
          "grid_regions: side and regions_per_side must be positive");
  require(side % regions_per_side == 0,
          "grid_regions: side must be divisible by regions_per_side");
  const Index cell = side / regions_per_side;
  std::vector<std::vector<Index>> blocks;
  for (Index rb = 0; rb < regions_per_side; ++rb) {
    for (Index cb = 0; cb < regions_per_side; ++cb) {
      std::vector<Index> block;
      block.reserve(static_cast<std::size_t>(cell * cell));
      for (Index r = rb * cell; r < (rb + 1) * cell; ++r) {
        for (Index c = cb * cell; c < (cb + 1) * cell; ++c) {
          block.push_back(r * side + c);
        }
      }
      blocks.push_back(std::move(block));
    }
  }
  return GroupPartition(std::move(blocks), side * side);
}

double GroupPartition::block_norm(const Vector& beta, Index b) const {
  double sq = 0.0;
  for (Index j : blocks_[static_cast<std::size_t>(b)]) {
    sq += beta[j] * beta[j];
  }
  return std::sqrt(sq);
}

double penalty_value(const Vector& beta, const GroupPartition& groups,
                     double lambda) {
  require(lambda >= 0.0, "penalty_value: lambda must be nonnegative");
  require_shape(beta.size() == groups.dimension(),
                "penalty_value: beta/partition dimension mismatch");
  double total = 0.0;
  for (Index b = 0; b < groups.block_count(); ++b) {
    total += groups.block_norm(beta, b);
  }
  return lambda * total;
}

Vector group_soft_threshold(const Vector& xi, const GroupPartition& groups,
                            double t) {
  require(t >= 0.0, "group_soft_threshold: threshold must be nonnegative");
  require_shape(xi.size() == groups.dimension(),
                "group_soft_threshold: input/partition dimension mismatch");
  Vector out(xi.size());
  for (Index b = 0; b < groups.block_count(); ++b) {
    const double norm = groups.block_norm(xi, b);
    if (norm <= t) {
      for (Index j : groups.block(b)) out[j] = 0.0;
    } else {
      const double scale = (norm - t) / norm;
      for (Index j : groups.block(b)) out[j] = scale * xi[j];
    }
  }
  return out;
}

Vector project_l2_ball(const Vector& beta, double radius) {
  require(radius > 0.0, "project_l2_ball: radius must be positive");
  const double norm = beta.norm();
  if (norm <= radius) return beta;
  return beta * (radius / norm);
}

}  // namespace rct
