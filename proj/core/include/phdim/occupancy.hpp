#pragma once

#include <cstdint>
#include <cstddef>

namespace phdim {

// An n,p,q,r-uniform occupancy layout on [0,1] with Lebesgue measure:
// floor(a*n) contiguous blocks, each holding one A-set of mass exactly q/n
// followed by r B-sets of mass exactly p/n. The indicator X_j is 1 iff the
// sample misses A_j and hits every B in block j; Y_n = (1/n) sum X_j.
struct OccupancyConfig {
  double p = 0.5;
  double q = 0.3;
  std::size_t r = 2;
  double a = 0.5;
  std::size_t n = 100000;
  std::size_t trials = 50;

  // Throws std::invalid_argument on out-of-range parameters and
  // "infeasible mass layout" when floor(a*n) blocks of mass (q + r*p)/n
  // exceed total mass 1.
  void validate() const;
};

struct OccupancyResult {
  double empirical_mean = 0;  // mean of Y_n over trials
  double analytic_gamma = 0;  // a * e^{-q} * (1 - e^{-p})^r
  double std_error = 0;       // of the trial mean
  double variance = 0;        // of Y_n across trials
  std::size_t n = 0;
  std::size_t trials = 0;
};

// a * e^{-q} * (1 - e^{-p})^r. Throws on p or q outside [0,1) or a < 0.
double occupancy_gamma(double p, double q, std::size_t r, double a);

// Monte-Carlo estimate of lim Y_n; per-trial seeds derived from `seed`, so
// results are independent of `threads`.
OccupancyResult simulate_occupancy_lln(const OccupancyConfig& cfg,
                                       std::uint64_t seed,
                                       std::size_t threads = 1);

}  // namespace phdim
