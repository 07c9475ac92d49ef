#include "phdim/mst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "phdim/union_find.hpp"

namespace phdim {

MstEdges minimum_spanning_tree(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  MstEdges result;
  if (n <= 1) return result;

  struct Edge {
    double length;
    std::size_t i, j;
  };
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.push_back({d(i, j), i, j});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.length != b.length) return a.length < b.length;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });

  UnionFind uf(n);
  for (const Edge& e : edges) {
    if (uf.unite(e.i, e.j)) {
      result.lengths.push_back(e.length);
      result.endpoints.emplace_back(e.i, e.j);
      if (e.length == 0) result.has_zero_length = true;
      if (result.lengths.size() == n - 1) break;
    }
  }
  return result;
}

MstEdges minimum_spanning_tree(const PointCloud& cloud, Metric metric) {
  const std::size_t n = cloud.size();
  MstEdges result;
  if (n <= 1) return result;

  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best(n, inf);
  std::vector<std::size_t> from(n, 0);
  std::vector<bool> in_tree(n, false);

  std::size_t current = 0;
  in_tree[0] = true;
  for (std::size_t step = 1; step < n; ++step) {
    auto p = cloud.point(current);
    std::size_t next = n;
    double next_d = inf;
    for (std::size_t j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      double dj = point_distance(p, cloud.point(j), metric);
      if (dj < best[j]) {
        best[j] = dj;
        from[j] = current;
      }
      if (best[j] < next_d) {
        next_d = best[j];
        next = j;
      }
    }
    in_tree[next] = true;
    result.lengths.push_back(next_d);
    result.endpoints.emplace_back(from[next], next);
    if (next_d == 0) result.has_zero_length = true;
    current = next;
  }
  return result;
}

double mst_alpha_weight(const MstEdges& edges, double alpha) {
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be > 0");
  double s = 0;
  for (double l : edges.lengths) s += std::pow(l, alpha);
  return s;
}

std::size_t mst_edges_exceeding(const MstEdges& edges, double delta) {
  if (delta < 0) throw std::invalid_argument("delta must be >= 0");
  std::size_t c = 0;
  for (double l : edges.lengths)
    if (l > delta) ++c;
  return c;
}

}  // namespace phdim
