#include "phdim/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace phdim {

double point_distance(std::span<const double> a, std::span<const double> b,
                      Metric metric) {
  if (metric == Metric::euclidean) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      double d = a[k] - b[k];
      s += d * d;
    }
    return std::sqrt(s);
  }
  double m = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

DistanceMatrix pairwise_distances(const PointCloud& cloud, Metric metric) {
  if (cloud.empty()) throw std::invalid_argument("empty input");
  const std::size_t n = cloud.size();
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d.set(i, j, point_distance(cloud.point(i), cloud.point(j), metric));
  return d;
}

double hausdorff_distance(const PointCloud& a, const PointCloud& b,
                          Metric metric) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty input");
  if (a.dim() != b.dim())
    throw std::invalid_argument("dimension mismatch between point clouds");
  auto directed = [&](const PointCloud& x, const PointCloud& y) {
    double worst = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < y.size(); ++j)
        best = std::min(best, point_distance(x.point(i), y.point(j), metric));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

double enclosing_radius(const DistanceMatrix& d) {
  double enc = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.size(); ++i) {
    double r = 0;
    for (std::size_t j = 0; j < d.size(); ++j) r = std::max(r, d(i, j));
    enc = std::min(enc, r);
  }
  return enc;
}

}  // namespace phdim
