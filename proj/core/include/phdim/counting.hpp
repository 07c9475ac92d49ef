#pragma once

#include <cstdint>
#include <optional>

#include "phdim/distance.hpp"
#include "phdim/point_cloud.hpp"

namespace phdim {

enum class CountMode {
  disjoint_balls,               // greedy maximal packing of delta-balls
  grid_boxes,                   // occupied origin-anchored cubes of mesh delta
  grid_boxes_with_mass_threshold  // only cubes with sample fraction >= a*delta^d
};

struct BallCountResult {
  double scale = 0;
  std::size_t count = 0;
  CountMode mode = CountMode::grid_boxes;
};

struct CountOptions {
  // Threshold parameter a and exponent d of the mass cutoff a*delta^d,
  // used only by grid_boxes_with_mass_threshold.
  double mass_threshold = 0;
  double mass_dimension = 1;
  // Seed for the deterministic shuffle that fixes the greedy packing order.
  std::uint64_t seed = 0;
  Metric metric = Metric::euclidean;
};

// Greedy packing is 1-maximal, not maximum: the exact packing number is
// NP-hard and the dimension-scaling use absorbs the constant-factor gap.
// The grid is anchored at the coordinate origin with floor assignment.
BallCountResult count_scale(const PointCloud& cloud, double delta,
                            CountMode mode, const CountOptions& opts = {});

}  // namespace phdim
