#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "phdim/distance.hpp"
#include "phdim/point_cloud.hpp"

namespace phdim {

enum class ComplexFlavor { rips, cech };

struct FilteredSimplex {
  std::vector<std::uint32_t> vertices;  // sorted ascending
  double value = 0;                     // filtration value, >= facet values

  std::size_t dim() const { return vertices.size() - 1; }
};

/// Simplices sorted by (value, dimension, lexicographic vertices); the order
/// respects the face relation for monotone values.
struct Filtration {
  std::vector<FilteredSimplex> simplices;
  std::size_t max_dim = 0;
  ComplexFlavor flavor = ComplexFlavor::rips;
  double max_scale = std::numeric_limits<double>::infinity();
};

// All simplices of dimension <= max_dim with value = max pairwise distance of
// the vertices, kept if value <= max_scale. Vertices enter at 0.
Filtration build_rips_filtration(
    const DistanceMatrix& d, std::size_t max_dim,
    double max_scale = std::numeric_limits<double>::infinity());

// Simplex value = radius of the minimal enclosing ball of its vertices
// (edge: half distance; triangle: circumradius if acute, else half the
// longest edge). Restricted to ambient dimension <= 3 and max_dim <= 2.
Filtration build_cech_filtration(
    const PointCloud& cloud, std::size_t max_dim,
    double max_scale = std::numeric_limits<double>::infinity());

// Radius of the smallest ball containing up to three points in R^m.
double min_enclosing_ball_radius(const PointCloud& cloud, std::uint32_t a,
                                 std::uint32_t b, std::uint32_t c);

}  // namespace phdim
