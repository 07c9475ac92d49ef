#include "phdim/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace phdim {

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw std::invalid_argument("point dimension must be >= 1");
  if (coords_.size() % dim_ != 0)
    throw std::invalid_argument("coordinate count not divisible by dimension");
  for (double c : coords_)
    if (!std::isfinite(c))
      throw std::invalid_argument("non-finite coordinate in point cloud");
}

void PointCloud::push_back(std::span<const double> p) {
  if (dim_ == 0) dim_ = p.size();
  if (p.size() != dim_)
    throw std::invalid_argument("point dimension mismatch");
  for (double c : p) {
    if (!std::isfinite(c))
      throw std::invalid_argument("non-finite coordinate in point cloud");
    coords_.push_back(c);
  }
}

std::vector<double> PointCloud::min_corner() const {
  std::vector<double> m(dim_, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t k = 0; k < dim_; ++k)
      m[k] = std::min(m[k], point(i)[k]);
  return m;
}

std::vector<double> PointCloud::max_corner() const {
  std::vector<double> m(dim_, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t k = 0; k < dim_; ++k)
      m[k] = std::max(m[k], point(i)[k]);
  return m;
}

PointCloud read_point_cloud_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  // Header: x1,...,xm (comment lines starting with '#' are skipped).
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string field;
    std::size_t expect = 1;
    while (std::getline(ss, field, ',')) {
      if (field != "x" + std::to_string(expect))
        throw std::runtime_error(path + ": bad header at line " +
                                 std::to_string(line_no) +
                                 ", expected x1,...,xm");
      ++expect;
    }
    dim = expect - 1;
    break;
  }
  if (dim == 0) throw std::runtime_error(path + ": empty input");

  std::vector<double> coords;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string field;
    std::size_t count = 0;
    while (std::getline(ss, field, ',')) {
      ++count;
      std::size_t pos = 0;
      double v;
      try {
        v = std::stod(field, &pos);
      } catch (const std::exception&) {
        throw std::runtime_error(path + ": malformed value '" + field +
                                 "' at line " + std::to_string(line_no));
      }
      if (!std::isfinite(v))
        throw std::runtime_error(path + ": non-finite value at line " +
                                 std::to_string(line_no));
      coords.push_back(v);
    }
    if (count != dim)
      throw std::runtime_error(path + ": inconsistent column count at line " +
                               std::to_string(line_no));
  }
  if (coords.empty()) throw std::runtime_error(path + ": empty input");
  return PointCloud(dim, std::move(coords));
}

void write_point_cloud_csv(const PointCloud& cloud, const std::string& path,
                           const std::string& comment_header) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (!comment_header.empty()) out << comment_header;
  for (std::size_t k = 1; k <= cloud.dim(); ++k)
    out << (k > 1 ? "," : "") << "x" << k;
  out << "\n";
  out.precision(17);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    auto p = cloud.point(i);
    for (std::size_t k = 0; k < p.size(); ++k)
      out << (k > 0 ? "," : "") << p[k];
    out << "\n";
  }
}

}  // namespace phdim
