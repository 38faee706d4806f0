#pragma once

#include <vector>

#include "rct/common.hpp"

namespace rct {

// Ordered partition of coordinate indices {0, ..., p-1} into disjoint,
// nonempty blocks.  Blocks may be non-contiguous (e.g. spatial regions
// of a row-major grid).
class GroupPartition {
 public:
  GroupPartition() = default;

  // Validates: every block nonempty, indices in range, each coordinate
  // covered exactly once.
  GroupPartition(std::vector<std::vector<Index>> blocks, Index dimension);

  // One block per coordinate.
  static GroupPartition singletons(Index dimension);

  // side x side row-major lattice split into regions_per_side^2 square
  // regions; side must be divisible by regions_per_side.
  static GroupPartition grid_regions(Index side, Index regions_per_side);

  Index dimension() const { return dimension_; }
  Index block_count() const { return static_cast<Index>(blocks_.size()); }
  const std::vector<Index>& block(Index b) const { return blocks_[b]; }
  const std::vector<std::vector<Index>>& blocks() const { return blocks_; }

  double block_norm(const Vector& beta, Index b) const;

 private:
  std::vector<std::vector<Index>> blocks_;
  Index dimension_ = 0;
};

// lambda * sum_b ||beta_b||_2.
double penalty_value(const Vector& beta, const GroupPartition& groups,
                     double lambda);

// Blockwise soft threshold: zero the block when ||xi_b|| <= t, else
// scale it by (||xi_b|| - t) / ||xi_b||.  Zeroed blocks are written as
// exact 0.0 so downstream support checks are bitwise.
Vector group_soft_threshold(const Vector& xi, const GroupPartition& groups,
                            double t);

// Euclidean projection onto the centered ball of the given radius.
// Inputs already inside the ball are returned unchanged.
Vector project_l2_ball(const Vector& beta, double radius);

}  // namespace rct
