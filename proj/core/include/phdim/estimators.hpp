#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phdim/measure.hpp"
#include "phdim/point_cloud.hpp"

namespace phdim {

struct OlsFit {
  double slope = 0;
  double intercept = 0;
  double slope_std_error = 0;
};

// Ordinary least squares of y against x; slope standard error from the
// residual variance. Requires >= 3 points for the error estimate.
OlsFit ols_fit(const std::vector<double>& x, const std::vector<double>& y);

struct RungStat {
  std::size_t n = 0;
  double mean = 0;
  double variance = 0;
  std::size_t trials = 0;
};

struct RegressionEstimate {
  double beta = 0;            // slope of log(mean statistic) vs log(n)
  double dim = 0;             // alpha / (1 - beta)
  double beta_std_error = 0;
  double dim_std_error = 0;   // delta-method: alpha / (1-beta)^2 * se(beta)
  double alpha = 1;
  std::size_t degree = 0;
  std::uint64_t seed = 0;
  std::vector<RungStat> rungs;
};

struct DimensionReport {
  std::string method;   // "ph(i,alpha)", "box", "correlation"
  double estimate = 0;
  double std_error = 0;
  double param_alpha = 0;
  long param_i = -1;    // -1 for the non-persistence methods
  std::uint64_t seed = 0;
  std::vector<double> ladder;  // n rungs or delta/r rungs actually used
};

// n in {2^8..2^13} with 20 trials for degree 0; {2^7..2^10} with 10 trials
// for higher degrees, where each barcode costs a Rips reduction.
std::vector<std::size_t> default_n_ladder(std::size_t degree);
std::size_t default_trials(std::size_t degree);

// E^i_alpha of a single cloud: degree 0 through the minimum-spanning-tree
// identity (adjacent gaps in one dimension), higher degrees through Rips
// persistence truncated at the enclosing radius.
double alpha_weight_statistic(const PointCloud& cloud, std::size_t degree,
                              double alpha);

// Per-rung means of E^i_alpha over `trials` independent clouds, then
// dim = alpha / (1 - beta) with beta the log-log slope. Throws
// "estimator divergent" when beta >= 1 - 1e-6 and "degenerate ladder" on a
// non-geometric or short ladder. Deterministic in (spec, ladder, trials,
// seed) regardless of `threads`.
RegressionEstimate ph_dimension_estimate(const MeasureSpec& spec,
                                         std::size_t degree, double alpha,
                                         const std::vector<std::size_t>& n_ladder,
                                         std::size_t trials,
                                         std::uint64_t seed,
                                         std::size_t threads = 1);

DimensionReport to_report(const RegressionEstimate& e);

// Six geometric rungs spanning two decades below a quarter of the cloud
// diameter — the central range of observed distances.
std::vector<double> default_delta_ladder(const PointCloud& cloud);

// Slope of log(occupied grid boxes) against -log(delta).
DimensionReport box_dimension_estimate(const PointCloud& cloud,
                                       const std::vector<double>& delta_ladder);

// Grassberger-Procaccia: C(r) = (1/n^2) #{(i,j) : d(x_i,x_j) <= r}, pairs
// ordered and including i = j so C is never zero; slope of log C vs log r.
DimensionReport correlation_dimension_estimate(
    const PointCloud& cloud, const std::vector<double>& r_ladder);

struct AhlforsOptions {
  double spread_threshold = 100;  // max/min ratio allowed for "consistent"
  double drift_tolerance = 0.2;   // |slope of log mean ratio vs log delta|
};

struct AhlforsLevel {
  double delta = 0;
  double min_ratio = 0;
  double max_ratio = 0;
  double mean_ratio = 0;
};

struct AhlforsReport {
  std::vector<AhlforsLevel> levels;
  double min_ratio = 0;
  double max_ratio = 0;
  double drift_slope = 0;  // nonzero drift flags a mismatched exponent d
  bool regular_consistent = false;
  std::string verdict;  // "regular-consistent" or "inconsistent"
};

// Empirical-mass ratios mu(B_delta(x)) / delta^d over `centers` points drawn
// from the measure and all ladder scales, against a reference sample of size
// n. Throws "underpowered" when n * delta_min^d < 30.
AhlforsReport ahlfors_regularity_diagnostic(
    const MeasureSpec& spec, double d, const std::vector<double>& delta_ladder,
    std::size_t centers, std::size_t n, std::uint64_t seed,
    const AhlforsOptions& opts = {});

// method,estimate,stderr,param_alpha,param_i,seed — one row per report.
void write_dimension_report_csv(const std::vector<DimensionReport>& reports,
                                const std::string& path,
                                const std::string& comment_header = "");

// n,mean,variance,trials — the per-rung detail behind a regression.
void write_rung_detail_csv(const RegressionEstimate& e, const std::string& path,
                           const std::string& comment_header = "");

}  // namespace phdim
