#include "phdim/occupancy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "phdim/parallel.hpp"
#include "phdim/rng.hpp"

namespace phdim {

namespace {

void check_ranges(double p, double q, std::size_t /*r*/, double a) {
  if (!(p >= 0) || p >= 1) throw std::invalid_argument("p must lie in [0,1)");
  if (!(q >= 0) || q >= 1) throw std::invalid_argument("q must lie in [0,1)");
  if (!(a >= 0)) throw std::invalid_argument("a must be >= 0");
}

}  // namespace

void OccupancyConfig::validate() const {
  check_ranges(p, q, r, a);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  // floor(a*n) blocks of mass (q + r*p)/n must fit inside total mass 1.
  double blocks = std::floor(a * static_cast<double>(n));
  double block_mass = q + static_cast<double>(r) * p;
  if (blocks * block_mass > static_cast<double>(n) * (1.0 + 1e-12))
    throw std::invalid_argument("infeasible mass layout");
}

double occupancy_gamma(double p, double q, std::size_t r, double a) {
  check_ranges(p, q, r, a);
  return a * std::exp(-q) * std::pow(1.0 - std::exp(-p), static_cast<double>(r));
}

OccupancyResult simulate_occupancy_lln(const OccupancyConfig& cfg,
                                       std::uint64_t seed,
                                       std::size_t threads) {
  cfg.validate();
  const std::size_t n = cfg.n;
  const std::size_t blocks =
      static_cast<std::size_t>(std::floor(cfg.a * static_cast<double>(n)));
  const double block_width =
      (cfg.q + static_cast<double>(cfg.r) * cfg.p) / static_cast<double>(n);
  const double a_width = cfg.q / static_cast<double>(n);
  const double b_width = cfg.p / static_cast<double>(n);
  const std::size_t segments = cfg.r + 1;  // A plus the r B-sets per block

  std::vector<double> y(cfg.trials, 0.0);
  parallel_for_index(cfg.trials, threads, [&](std::size_t t) {
    Rng rng(derive_seed(seed, t));
    // hit[j * segments] marks A_j; the following r slots mark the B-sets.
    std::vector<char> hit(blocks * segments, 0);
    for (std::size_t s = 0; s < n; ++s) {
      double u = rng.uniform01();
      if (block_width <= 0) continue;  // zero-mass blocks are never hit
      double scaled = u / block_width;
      if (scaled >= static_cast<double>(blocks)) continue;  // slack region
      std::size_t j = static_cast<std::size_t>(scaled);
      double offset = u - static_cast<double>(j) * block_width;
      std::size_t segment;
      if (offset < a_width)
        segment = 0;
      else if (b_width <= 0)
        continue;  // zero-mass B-sets cannot be hit
      else
        segment = 1 + static_cast<std::size_t>((offset - a_width) / b_width);
      if (segment >= segments) segment = segments - 1;  // float edge case
      hit[j * segments + segment] = 1;
    }
    std::size_t indicators = 0;
    for (std::size_t j = 0; j < blocks; ++j) {
      if (hit[j * segments]) continue;  // sample landed in A_j
      bool all_b = true;
      for (std::size_t k = 1; k < segments; ++k)
        if (!hit[j * segments + k]) {
          all_b = false;
          break;
        }
      if (all_b) ++indicators;
    }
    y[t] = static_cast<double>(indicators) / static_cast<double>(n);
  });

  OccupancyResult result;
  result.n = n;
  result.trials = cfg.trials;
  result.analytic_gamma = occupancy_gamma(cfg.p, cfg.q, cfg.r, cfg.a);
  double sum = 0;
  for (double v : y) sum += v;
  result.empirical_mean = sum / static_cast<double>(cfg.trials);
  double sq = 0;
  for (double v : y) sq += (v - result.empirical_mean) * (v - result.empirical_mean);
  result.variance =
      cfg.trials > 1 ? sq / static_cast<double>(cfg.trials - 1) : 0.0;
  result.std_error =
      std::sqrt(result.variance / static_cast<double>(cfg.trials));
  return result;
}

}  // namespace phdim
