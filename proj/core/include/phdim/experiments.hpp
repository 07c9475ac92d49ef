#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "phdim/config.hpp"
#include "phdim/estimators.hpp"
#include "phdim/occupancy.hpp"
#include "phdim/point_cloud.hpp"

namespace phdim {

// A run would exceed the default Rips budget (degree 1 capped at n = 2500,
// degree 2 at n = 400) without override_guards; the CLI maps this to exit
// code 3.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "# config_hash=<hex> seed=<u64>\n" — prepended to every output artifact.
std::string output_comment_header(const ExperimentConfig& cfg);

struct ConvergenceRung {
  std::size_t n = 0;
  double mean = 0;
  double variance = 0;
  double mean_normalized = 0;
  double variance_normalized = 0;
  std::size_t trials = 0;
};

struct ConvergenceResult {
  double d = 0;  // dimension used for the n^{-(d-alpha)/d} normalization
  std::vector<ConvergenceRung> rungs;
};

// Per (n, trial) rows of E^i_alpha and its normalization by n^{(d-alpha)/d},
// written to convergence_detail.csv, with per-n summaries in
// convergence_summary.csv.
ConvergenceResult run_convergence_experiment(const ExperimentConfig& cfg);

struct OscillationRung {
  std::size_t n = 0;
  int phase = 0;  // 1 = thin-interval (post-L) levels, 0 = baseline levels
  bool aligned = true;
  double mean_normalized = 0;
  std::size_t trials = 0;
};

struct OscillationResult {
  std::vector<OscillationRung> rungs;
  double dip_mean = 0;   // over phase-1 rungs
  double base_mean = 0;  // over phase-0 rungs
  double ratio = 0;      // dip / base, predicted near (5/7)^alpha
};

// Normalized E^0_alpha means at rungs aligned with the two length regimes of
// the nested schedule; the rung n = 2^b probes level b, whose intervals are a
// factor 5/7 thinner after an L operation than after a Gamma. Written to
// oscillation.csv and oscillation_summary.csv.
OscillationResult run_oscillation_experiment(const ExperimentConfig& cfg);

struct CountScalingRung {
  std::size_t n = 0;
  double mean_over_n = 0;
  double var_over_n2 = 0;
  std::size_t trials = 0;
};

struct CountScalingResult {
  std::vector<CountScalingRung> rungs;
};

// Mean |PH_i|/n and Var(|PH_i|)/n^2 per rung; count_scaling.csv.
CountScalingResult run_count_scaling_experiment(const ExperimentConfig& cfg);

// Occupancy law of large numbers; occupancy.csv.
OccupancyResult run_occupancy_experiment(const ExperimentConfig& cfg);

struct DimensionReportResult {
  RegressionEstimate ph;
  std::vector<DimensionReport> reports;  // ph, box, correlation
};

// PH, box, and correlation dimension estimates side by side;
// dimension_report.csv plus the per-rung detail in ph_rungs.csv.
DimensionReportResult run_dimension_report(const ExperimentConfig& cfg);

// Headerless or x1..xm-headed CSV of coordinates; comment lines start with
// '#'. Errors name the offending line; an empty file is "empty input".
PointCloud ingest_point_cloud(const std::string& path);

}  // namespace phdim
