#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "phdim/point_cloud.hpp"

namespace phdim {

enum class Metric { euclidean, chebyshev };

double point_distance(std::span<const double> a, std::span<const double> b,
                      Metric metric = Metric::euclidean);

/// Symmetric n x n pairwise-distance table defining a finite metric space.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

  std::size_t size() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, double v) {
    d_[i * n_ + j] = v;
    d_[j * n_ + i] = v;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

// Entry (i,j) = metric distance between points i and j. Throws on empty input.
DistanceMatrix pairwise_distances(const PointCloud& cloud,
                                  Metric metric = Metric::euclidean);

// Finite-set Hausdorff distance: max over both directions of the min
// point-to-set distance. Throws on empty input or dimension mismatch.
double hausdorff_distance(const PointCloud& a, const PointCloud& b,
                          Metric metric = Metric::euclidean);

// min over points i of max over j of d(i, j). Rips persistence truncated at
// this scale is exact: past it the complex is a cone over the minimizing point.
double enclosing_radius(const DistanceMatrix& d);

}  // namespace phdim
