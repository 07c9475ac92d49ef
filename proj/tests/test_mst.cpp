#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "phdim/distance.hpp"
#include "phdim/measure.hpp"
#include "phdim/mst.hpp"
#include "phdim/rng.hpp"
#include "phdim/union_find.hpp"

using namespace phdim;

namespace {

PointCloud random_cloud(std::size_t n, std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> coords(n * dim);
  for (double& c : coords) c = rng.uniform(0, 1);
  return PointCloud(dim, std::move(coords));
}

std::vector<double> sorted_lengths(const MstEdges& e) {
  std::vector<double> out = e.lengths;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("unit square MST has three unit edges") {
  PointCloud cloud(2, {0, 0, 1, 0, 0, 1, 1, 1});
  MstEdges edges = minimum_spanning_tree(pairwise_distances(cloud));
  REQUIRE(edges.lengths.size() == 3);
  for (double len : sorted_lengths(edges)) CHECK(len == doctest::Approx(1.0));
}

TEST_CASE("collinear points") {
  PointCloud cloud(1, {0.0, 1.0, 3.0});
  auto lens = sorted_lengths(minimum_spanning_tree(pairwise_distances(cloud)));
  REQUIRE(lens.size() == 2);
  CHECK(lens[0] == doctest::Approx(1.0));
  CHECK(lens[1] == doctest::Approx(2.0));
}

TEST_CASE("single point has no edges") {
  PointCloud cloud(2, {0.5, 0.5});
  CHECK(minimum_spanning_tree(pairwise_distances(cloud)).lengths.empty());
}

TEST_CASE("Kruskal and Prim agree on the edge-length multiset") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    PointCloud cloud = random_cloud(60, 2 + seed % 2, seed);
    auto kruskal = sorted_lengths(minimum_spanning_tree(pairwise_distances(cloud)));
    auto prim = sorted_lengths(minimum_spanning_tree(cloud));
    REQUIRE(kruskal.size() == prim.size());
    for (std::size_t i = 0; i < kruskal.size(); ++i)
      CHECK(kruskal[i] == doctest::Approx(prim[i]).epsilon(1e-12));
  }
}

TEST_CASE("MST edge multiset is permutation invariant") {
  PointCloud cloud = random_cloud(40, 2, 17);
  std::vector<std::size_t> perm(cloud.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  Rng rng(99);
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[rng.uniform_index(i)]);
  PointCloud shuffled;
  for (std::size_t i : perm) shuffled.push_back(cloud.point(i));
  auto a = sorted_lengths(minimum_spanning_tree(pairwise_distances(cloud)));
  auto b = sorted_lengths(minimum_spanning_tree(pairwise_distances(shuffled)));
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
}

TEST_CASE("MST total weight is isometry invariant") {
  PointCloud cloud = random_cloud(30, 2, 23);
  PointCloud moved;
  const double c = std::cos(0.7), s = std::sin(0.7);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    auto p = cloud.point(i);
    std::vector<double> q{c * p[0] - s * p[1] + 2.0,
                          s * p[0] + c * p[1] - 1.0};
    moved.push_back(q);
  }
  double w1 = mst_alpha_weight(minimum_spanning_tree(pairwise_distances(cloud)), 1.0);
  double w2 = mst_alpha_weight(minimum_spanning_tree(pairwise_distances(moved)), 1.0);
  CHECK(w1 == doctest::Approx(w2).epsilon(1e-10));
}

TEST_CASE("edges exceeding epsilon count the threshold-graph components") {
  // Lemma-style identity: #{MST edges > eps} = beta_0(strict-< graph) - 1
  // for generic eps.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PointCloud cloud = random_cloud(50, 2, 100 + seed);
    DistanceMatrix d = pairwise_distances(cloud);
    MstEdges edges = minimum_spanning_tree(d);
    Rng rng(seed);
    double eps = rng.uniform(0.01, 0.4);
    UnionFind uf(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i)
      for (std::size_t j = i + 1; j < cloud.size(); ++j)
        if (d(i, j) < eps) uf.unite(i, j);
    CHECK(mst_edges_exceeding(edges, eps) == uf.components() - 1);
  }
}

TEST_CASE("alpha weight validates alpha") {
  PointCloud cloud(1, {0.0, 1.0});
  MstEdges edges = minimum_spanning_tree(pairwise_distances(cloud));
  CHECK_THROWS_AS(mst_alpha_weight(edges, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(mst_alpha_weight(edges, -1.0), std::invalid_argument);
  CHECK(mst_alpha_weight(edges, 2.0) == doctest::Approx(1.0));
}

TEST_CASE("duplicate points set the zero-length flag") {
  PointCloud cloud(2, {0.3, 0.3, 0.3, 0.3, 1.0, 1.0});
  MstEdges edges = minimum_spanning_tree(pairwise_distances(cloud));
  CHECK(edges.has_zero_length);
  CHECK(*std::min_element(edges.lengths.begin(), edges.lengths.end()) == 0.0);
}

TEST_CASE("longest MST edge on the uniform square tracks (log n / n)^(1/2)") {
  for (std::size_t n : {std::size_t{256}, std::size_t{8192}}) {
    MeasureSpec spec = measure_from_name("uniform-cube");
    spec.ambient_dim = 2;
    PointCloud cloud = sample_measure(spec, n, 1234);
    MstEdges edges = minimum_spanning_tree(cloud);
    double longest =
        *std::max_element(edges.lengths.begin(), edges.lengths.end());
    double reference = std::sqrt(std::log(static_cast<double>(n)) /
                                 static_cast<double>(n));
    CHECK(longest >= reference / 4.0);
    CHECK(longest <= reference * 4.0);
  }
}
