#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <set>

#include "phdim/intervals.hpp"
#include "phdim/measure.hpp"

using namespace phdim;

TEST_CASE("nominal dimensions of the shipped measures") {
  const double log23 = std::log(2.0) / std::log(3.0);
  CHECK(measure_from_name("cantor-middle-thirds").nominal_dimension() ==
        doctest::Approx(log23).epsilon(1e-12));
  MeasureSpec beta_half = measure_from_name("cantor-middle-beta");
  beta_half.beta = 0.5;
  CHECK(beta_half.nominal_dimension() ==
        doctest::Approx(std::log(2.0) / std::log(4.0)).epsilon(1e-12));
  CHECK(measure_from_name("sierpinski-triangle").nominal_dimension() ==
        doctest::Approx(std::log(3.0) / std::log(2.0)).epsilon(1e-12));
  CHECK(measure_from_name("menger-sponge").nominal_dimension() ==
        doctest::Approx(std::log(20.0) / std::log(3.0)).epsilon(1e-12));
  CHECK(measure_from_name("cantor-cross-interval").nominal_dimension() ==
        doctest::Approx(1.0 + log23).epsilon(1e-12));
  MeasureSpec dust = measure_from_name("cantor-dust");
  dust.ambient_dim = 3;
  CHECK(dust.nominal_dimension() == doctest::Approx(3 * log23).epsilon(1e-12));
  MeasureSpec cube = measure_from_name("uniform-cube");
  cube.ambient_dim = 4;
  CHECK(cube.nominal_dimension() == doctest::Approx(4.0));
  CHECK(measure_from_name("torus").nominal_dimension() == doctest::Approx(2.0));
  CHECK(measure_from_name("stacked-tori").nominal_dimension() ==
        doctest::Approx(2.0));
}

TEST_CASE("unknown measure names are rejected") {
  CHECK_THROWS_AS(measure_from_name("no-such-measure"), std::invalid_argument);
}

TEST_CASE("sampling is deterministic in the seed") {
  MeasureSpec spec = measure_from_name("sierpinski-triangle");
  PointCloud a = sample_measure(spec, 100, 5);
  PointCloud b = sample_measure(spec, 100, 5);
  PointCloud c = sample_measure(spec, 100, 6);
  CHECK(a.coords() == b.coords());
  CHECK(a.coords() != c.coords());
}

TEST_CASE("cantor samples lie in deep construction intervals") {
  MeasureSpec spec = measure_from_name("cantor-middle-thirds");
  PointCloud cloud = sample_measure(spec, 2000, 77);
  auto levels = build_schedule_levels(cantor_schedule(8));
  const IntervalCollection& level8 = levels.back();
  for (std::size_t i = 0; i < cloud.size(); ++i)
    CHECK(level8.contains(cloud.point(i)[0]));
}

TEST_CASE("middle-beta samples avoid the removed middle gap") {
  MeasureSpec spec = measure_from_name("cantor-middle-beta");
  spec.beta = 0.5;
  PointCloud cloud = sample_measure(spec, 1000, 3);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    double x = cloud.point(i)[0];
    CHECK(x >= 0);
    CHECK(x <= 1);
    bool in_gap = x > 0.25 + 1e-9 && x < 0.75 - 1e-9;
    CHECK_FALSE(in_gap);
  }
}

TEST_CASE("nested-schedule sampling follows the given schedule") {
  IntervalSchedule s = canonical_oscillation_schedule(10);
  auto levels = build_schedule_levels(s);
  PointCloud cloud = sample_nested(s, 1500, 11);
  for (std::size_t i = 0; i < cloud.size(); ++i)
    CHECK(levels.back().contains(cloud.point(i)[0]));
}

TEST_CASE("sierpinski samples lie in the first-level triangles") {
  MeasureSpec spec = measure_from_name("sierpinski-triangle");
  PointCloud cloud = sample_measure(spec, 2000, 13);
  // The central inverted triangle is empty: no point has barycentric-style
  // midpoint coordinates. Use the level-1 test: each point belongs to one of
  // the three half-scale copies anchored at the outer vertices.
  const double v[3][2] = {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    double x = cloud.point(i)[0], y = cloud.point(i)[1];
    bool in_copy = false;
    for (const auto& vert : v) {
      // Point of copy k is vert/2 + (point in full triangle)/2.
      double px = 2 * x - vert[0], py = 2 * y - vert[1];
      // Inside the full triangle (with tolerance)?
      bool inside = py >= -1e-9 &&
                    py <= std::sqrt(3.0) * px + 1e-9 &&
                    py <= std::sqrt(3.0) * (1 - px) + 1e-9;
      in_copy = in_copy || inside;
    }
    CHECK(in_copy);
  }
}

TEST_CASE("menger samples avoid the removed center cells") {
  MeasureSpec spec = measure_from_name("menger-sponge");
  PointCloud cloud = sample_measure(spec, 2000, 21);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    int middles = 0;
    for (double c : cloud.point(i)) {
      CHECK(c >= 0);
      CHECK(c <= 1);
      int cell = static_cast<int>(std::floor(c * 3.0));
      if (cell > 2) cell = 2;
      if (cell == 1) ++middles;
    }
    CHECK(middles <= 1);  // the 20 kept subcells have at most one middle index
  }
}

TEST_CASE("cantor-cross-interval is cantor in x and uniform in y") {
  MeasureSpec spec = measure_from_name("cantor-cross-interval");
  PointCloud cloud = sample_measure(spec, 1500, 8);
  auto levels = build_schedule_levels(cantor_schedule(6));
  double ymin = 1, ymax = 0;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    CHECK(levels.back().contains(cloud.point(i)[0]));
    ymin = std::min(ymin, cloud.point(i)[1]);
    ymax = std::max(ymax, cloud.point(i)[1]);
  }
  CHECK(ymin < 0.05);  // uniform y fills [0,1]
  CHECK(ymax > 0.95);
}

TEST_CASE("torus samples satisfy the surface equation") {
  MeasureSpec spec = measure_from_name("torus");
  PointCloud cloud = sample_measure(spec, 500, 4);
  REQUIRE(cloud.dim() == 3);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    double x = cloud.point(i)[0], y = cloud.point(i)[1], z = cloud.point(i)[2];
    double ring = std::sqrt(x * x + y * y) - spec.R;
    CHECK(ring * ring + z * z == doctest::Approx(spec.r * spec.r).epsilon(1e-9));
  }
}

TEST_CASE("stacked tori split between the two sheets") {
  MeasureSpec spec = measure_from_name("stacked-tori");
  PointCloud cloud = sample_measure(spec, 2000, 15);
  std::size_t upper = 0;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    double z = cloud.point(i)[2];
    CHECK(std::abs(z) <= spec.offset + spec.r + 1e-9);
    if (z > spec.r + 1e-9) ++upper;
  }
  // Translation probability 1/2: both sheets populated.
  CHECK(upper > 500);
  CHECK(upper < 1500);
}

TEST_CASE("uniform cube fills the cube") {
  MeasureSpec spec = measure_from_name("uniform-cube");
  spec.ambient_dim = 3;
  PointCloud cloud = sample_measure(spec, 3000, 31);
  REQUIRE(cloud.dim() == 3);
  auto lo = cloud.min_corner();
  auto hi = cloud.max_corner();
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(lo[k] >= 0);
    CHECK(lo[k] < 0.05);
    CHECK(hi[k] <= 1);
    CHECK(hi[k] > 0.95);
  }
}

TEST_CASE("spec validation rejects bad parameters") {
  MeasureSpec spec = measure_from_name("cantor-middle-beta");
  spec.beta = 1.5;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  MeasureSpec torus = measure_from_name("torus");
  torus.r = 3;  // minor radius must stay below the major radius
  CHECK_THROWS_AS(torus.validate(), std::invalid_argument);
}
