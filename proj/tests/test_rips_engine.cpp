#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "phdim/measure.hpp"
#include "phdim/reduction.hpp"
#include "phdim/rips.hpp"
#include "phdim/rng.hpp"

using namespace phdim;

namespace {

PointCloud random_cloud(std::size_t n, std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> coords(n * dim);
  for (double& c : coords) c = rng.uniform(0, 1);
  return PointCloud(dim, std::move(coords));
}

}  // namespace

TEST_CASE("implicit engine equals explicit reduction on random clouds") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    PointCloud cloud = random_cloud(18, 2 + seed % 2, 4000 + seed);
    DistanceMatrix d = pairwise_distances(cloud);
    // Explicit filtration truncated at the enclosing radius for parity with
    // the engine's default; the barcode is unchanged by the truncation.
    Barcode fast = rips_persistence(d, 2);
    Barcode slow = compute_persistence(build_rips_filtration(d, 3));
    CHECK(oracle::barcodes_equal(fast, slow, 3, 1e-12));
  }
}

TEST_CASE("engine equals explicit reduction on degenerate lattice inputs") {
  // A 4x4 integer grid has many tied distances.
  std::vector<double> coords;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      coords.push_back(x);
      coords.push_back(y);
    }
  DistanceMatrix d = pairwise_distances(PointCloud(2, coords));
  Barcode fast = rips_persistence(d, 1);
  Barcode slow = compute_persistence(build_rips_filtration(d, 2));
  CHECK(oracle::barcodes_equal(fast, slow, 2, 1e-12));
}

TEST_CASE("engine unit square PH1") {
  DistanceMatrix d =
      pairwise_distances(PointCloud(2, {0, 0, 1, 0, 0, 1, 1, 1}));
  Barcode b = rips_persistence(d, 1);
  REQUIRE(b.degree(0).size() == 3);
  REQUIRE(b.degree(1).size() == 1);
  CHECK(b.degree(1)[0].birth == doctest::Approx(1.0));
  CHECK(b.degree(1)[0].death == doctest::Approx(std::sqrt(2.0)));
  CHECK_FALSE(b.truncated_at.has_value());
}

TEST_CASE("engine PH0 equals the MST lengths at scale") {
  MeasureSpec spec = measure_from_name("sierpinski-triangle");
  PointCloud cloud = sample_measure(spec, 120, 9);
  DistanceMatrix d = pairwise_distances(cloud);
  Barcode b = rips_persistence(d, 1);
  CHECK(b.degree(0).size() == cloud.size() - 1);
  for (const auto& iv : b.degree(0)) CHECK(iv.birth == 0);
}

TEST_CASE("a low threshold truncates and flags the barcode") {
  PointCloud cloud(1, {0.0, 1.0, 10.0});
  DistanceMatrix d = pairwise_distances(cloud);
  Barcode full = rips_persistence(d, 1);
  CHECK(full.degree(0).size() == 2);
  Barcode cut = rips_persistence(d, 1, 2.0);
  CHECK(cut.degree(0).size() == 1);  // the (0,9) merge is beyond the cutoff
  CHECK(cut.truncated_at.has_value());
  CHECK(*cut.truncated_at == doctest::Approx(2.0));
}

TEST_CASE("engine is deterministic") {
  PointCloud cloud = random_cloud(40, 3, 77);
  DistanceMatrix d = pairwise_distances(cloud);
  Barcode a = rips_persistence(d, 2);
  Barcode b = rips_persistence(d, 2);
  REQUIRE(oracle::barcodes_equal(a, b, 3, 0.0));
}

TEST_CASE("engine rejects empty input") {
  CHECK_THROWS_AS(rips_persistence(DistanceMatrix{}, 1),
                  std::invalid_argument);
}
