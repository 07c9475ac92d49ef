#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace phdim {

/// A finite set of points in R^m, stored row-major.
class PointCloud {
 public:
  PointCloud() = default;
  PointCloud(std::size_t dim, std::vector<double> coords);

  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return coords_.empty(); }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }

  void push_back(std::span<const double> p);

  const std::vector<double>& coords() const { return coords_; }
  std::vector<double>& coords() { return coords_; }

  // Coordinate-wise min/max over all points.
  std::vector<double> min_corner() const;
  std::vector<double> max_corner() const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

// CSV with header x1,...,xm, one row per point. Throws std::runtime_error
// naming the offending line on malformed input.
PointCloud read_point_cloud_csv(const std::string& path);
void write_point_cloud_csv(const PointCloud& cloud, const std::string& path,
                           const std::string& comment_header = "");

}  // namespace phdim
