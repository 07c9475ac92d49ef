#include "phdim/counting.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "phdim/rng.hpp"

namespace phdim {

namespace {

std::uint64_t cell_key_hash(const std::vector<std::int64_t>& key) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::int64_t v : key) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 0x100000001b3ULL;
    h = splitmix64(h);
  }
  return h;
}

std::size_t count_disjoint_balls(const PointCloud& cloud, double delta,
                                 const CountOptions& opts) {
  const std::size_t n = cloud.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(opts.seed);
  for (std::size_t i = n; i > 1; --i)
    std::swap(order[i - 1], order[rng.uniform_index(i)]);

  // Open balls of radius delta are disjoint iff centers are >= 2*delta apart.
  std::vector<std::size_t> centers;
  for (std::size_t idx : order) {
    bool ok = true;
    for (std::size_t c : centers) {
      if (point_distance(cloud.point(idx), cloud.point(c), opts.metric) <
          2 * delta) {
        ok = false;
        break;
      }
    }
    if (ok) centers.push_back(idx);
  }
  return centers.size();
}

}  // namespace

BallCountResult count_scale(const PointCloud& cloud, double delta,
                            CountMode mode, const CountOptions& opts) {
  if (cloud.empty()) throw std::invalid_argument("empty input");
  if (!(delta > 0)) throw std::invalid_argument("scale delta must be > 0");

  BallCountResult res;
  res.scale = delta;
  res.mode = mode;

  if (mode == CountMode::disjoint_balls) {
    res.count = count_disjoint_balls(cloud, delta, opts);
    return res;
  }

  if (mode == CountMode::grid_boxes_with_mass_threshold &&
      opts.mass_threshold < 0)
    throw std::invalid_argument("mass threshold must be >= 0");

  const std::size_t n = cloud.size();
  const std::size_t m = cloud.dim();
  std::unordered_map<std::uint64_t, std::size_t> cells;
  std::vector<std::int64_t> key(m);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = cloud.point(i);
    for (std::size_t k = 0; k < m; ++k)
      key[k] = static_cast<std::int64_t>(std::floor(p[k] / delta));
    ++cells[cell_key_hash(key)];
  }

  if (mode == CountMode::grid_boxes) {
    res.count = cells.size();
    return res;
  }

  // Empirical measure of a cube = sample fraction; keep cubes with
  // fraction >= a * delta^d.
  const double cutoff =
      opts.mass_threshold * std::pow(delta, opts.mass_dimension);
  std::size_t kept = 0;
  for (const auto& [k, c] : cells)
    if (static_cast<double>(c) / static_cast<double>(n) >= cutoff) ++kept;
  res.count = kept;
  return res;
}

}  // namespace phdim
