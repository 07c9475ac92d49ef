#include "phdim/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phdim {

namespace {

void sort_filtration(Filtration& f) {
  std::sort(f.simplices.begin(), f.simplices.end(),
            [](const FilteredSimplex& a, const FilteredSimplex& b) {
              if (a.value != b.value) return a.value < b.value;
              if (a.vertices.size() != b.vertices.size())
                return a.vertices.size() < b.vertices.size();
              return a.vertices < b.vertices;
            });
}

// Enumerate all (k+1)-subsets of 0..n-1, invoking fn on each.
template <typename Fn>
void for_each_subset(std::uint32_t n, std::size_t k_plus_1, Fn&& fn) {
  std::vector<std::uint32_t> idx(k_plus_1);
  for (std::size_t i = 0; i < k_plus_1; ++i) idx[i] = i;
  if (k_plus_1 > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k_plus_1;
    while (i > 0) {
      --i;
      if (idx[i] != n - k_plus_1 + i) break;
      if (i == 0) return;
    }
    ++idx[i];
    for (std::size_t j = i + 1; j < k_plus_1; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Filtration build_rips_filtration(const DistanceMatrix& d, std::size_t max_dim,
                                 double max_scale) {
  if (!(max_scale > 0)) throw std::invalid_argument("max_scale must be > 0");
  const std::uint32_t n = static_cast<std::uint32_t>(d.size());
  Filtration f;
  f.max_dim = max_dim;
  f.flavor = ComplexFlavor::rips;
  f.max_scale = max_scale;

  for (std::uint32_t v = 0; v < n; ++v)
    f.simplices.push_back({{v}, 0.0});

  for (std::size_t dim = 1; dim <= max_dim; ++dim) {
    for_each_subset(n, dim + 1, [&](const std::vector<std::uint32_t>& vs) {
      double diam = 0;
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          diam = std::max(diam, d(vs[i], vs[j]));
      if (diam <= max_scale) f.simplices.push_back({vs, diam});
    });
  }
  sort_filtration(f);
  return f;
}

double min_enclosing_ball_radius(const PointCloud& cloud, std::uint32_t a,
                                 std::uint32_t b, std::uint32_t c) {
  auto pa = cloud.point(a);
  auto pb = cloud.point(b);
  auto pc = cloud.point(c);
  const std::size_t m = cloud.dim();

  auto sq = [&](std::span<const double> u, std::span<const double> v) {
    double s = 0;
    for (std::size_t k = 0; k < m; ++k) s += (u[k] - v[k]) * (u[k] - v[k]);
    return s;
  };
  const double ab2 = sq(pa, pb), ac2 = sq(pa, pc), bc2 = sq(pb, pc);
  const double longest2 = std::max({ab2, ac2, bc2});

  // Diametral ball of the longest side covers the third point iff the
  // triangle is right or obtuse at the opposite vertex.
  if (2 * longest2 >= ab2 + ac2 + bc2) return std::sqrt(longest2) / 2;

  // Acute: circumradius R = abc / (4 * area), via Heron in squared form.
  const double num = ab2 * ac2 * bc2;
  const double den = 2 * (ab2 * ac2 + ab2 * bc2 + ac2 * bc2) -
                     (ab2 * ab2 + ac2 * ac2 + bc2 * bc2);
  return std::sqrt(num / den);
}

Filtration build_cech_filtration(const PointCloud& cloud, std::size_t max_dim,
                                 double max_scale) {
  if (cloud.empty()) throw std::invalid_argument("empty input");
  if (cloud.dim() > 3)
    throw std::invalid_argument(
        "cech filtration supports ambient dimension <= 3 only");
  if (max_dim > 2)
    throw std::invalid_argument("cech filtration supports max_dim <= 2 only");
  if (!(max_scale > 0)) throw std::invalid_argument("max_scale must be > 0");

  const std::uint32_t n = static_cast<std::uint32_t>(cloud.size());
  Filtration f;
  f.max_dim = max_dim;
  f.flavor = ComplexFlavor::cech;
  f.max_scale = max_scale;

  for (std::uint32_t v = 0; v < n; ++v) f.simplices.push_back({{v}, 0.0});

  if (max_dim >= 1) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j) {
        double r = point_distance(cloud.point(i), cloud.point(j)) / 2;
        if (r <= max_scale) f.simplices.push_back({{i, j}, r});
      }
  }
  if (max_dim >= 2) {
    for_each_subset(n, 3, [&](const std::vector<std::uint32_t>& vs) {
      double r = min_enclosing_ball_radius(cloud, vs[0], vs[1], vs[2]);
      if (r <= max_scale) f.simplices.push_back({vs, r});
    });
  }
  sort_filtration(f);
  return f;
}

}  // namespace phdim
