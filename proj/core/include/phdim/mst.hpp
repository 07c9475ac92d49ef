#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "phdim/distance.hpp"
#include "phdim/point_cloud.hpp"

namespace phdim {

/// Edges of a minimum spanning tree: n-1 lengths for an n-point input.
struct MstEdges {
  std::vector<double> lengths;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints;
  // Set when the input contained duplicate points (zero-length edges).
  bool has_zero_length = false;
};

// Kruskal over the full edge list; ties in length broken by lexicographic
// endpoint indices, so the edge multiset is deterministic for degenerate
// inputs. n = 1 yields an empty edge list.
MstEdges minimum_spanning_tree(const DistanceMatrix& d);

// Dense Prim directly on the cloud: same tree weight as Kruskal without
// materializing the O(n^2) edge list. Used by the n-ladder estimators.
MstEdges minimum_spanning_tree(const PointCloud& cloud,
                               Metric metric = Metric::euclidean);

// Sum of |e|^alpha over the tree edges. Throws if alpha <= 0.
double mst_alpha_weight(const MstEdges& edges, double alpha);

// #{e : |e| > delta}, strict.
std::size_t mst_edges_exceeding(const MstEdges& edges, double delta);

}  // namespace phdim
