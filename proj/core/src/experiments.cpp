#include "phdim/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "phdim/barcode.hpp"
#include "phdim/distance.hpp"
#include "phdim/parallel.hpp"
#include "phdim/rips.hpp"
#include "phdim/rng.hpp"

namespace phdim {

namespace {

constexpr double kLog2OverLog3 = 0.63092975357145743;

std::ofstream open_output(const ExperimentConfig& cfg,
                          const std::string& name) {
  std::filesystem::create_directories(cfg.out_dir);
  std::filesystem::path path = std::filesystem::path(cfg.out_dir) / name;
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << output_comment_header(cfg);
  out.precision(17);
  return out;
}

void check_resource_guards(const ExperimentConfig& cfg, std::size_t degree,
                           std::size_t max_n) {
  if (cfg.override_guards || degree == 0) return;
  std::size_t cap;
  if (degree == 1)
    cap = 2500;
  else if (degree == 2)
    cap = 400;
  else
    cap = 150;
  if (max_n > cap)
    throw ResourceGuardError(
        "degree " + std::to_string(degree) + " Rips is capped at n = " +
        std::to_string(cap) + " (requested " + std::to_string(max_n) +
        "); set override_guards to proceed");
}

// Uniform subsample of k distinct points (partial Fisher-Yates).
PointCloud subsample(const PointCloud& cloud, std::size_t k,
                     std::uint64_t seed) {
  if (k > cloud.size())
    throw std::runtime_error("rung n = " + std::to_string(k) +
                             " exceeds the ingested cloud size " +
                             std::to_string(cloud.size()));
  Rng rng(seed);
  std::vector<std::size_t> index(cloud.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
  PointCloud out;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + rng.uniform_index(index.size() - i);
    std::swap(index[i], index[j]);
    out.push_back(cloud.point(index[i]));
  }
  return out;
}

using TrialSampler =
    std::function<PointCloud(std::size_t n, std::uint64_t seed)>;

// The sampler behind an experiment: a measure to draw from, or subsamples of
// one ingested cloud.
struct InputSource {
  TrialSampler sample;
  double dimension = 0;  // for normalization / defaulting
  std::string name;
};

InputSource resolve_input(const ExperimentConfig& cfg) {
  InputSource src;
  if (cfg.measure) {
    MeasureSpec spec = *cfg.measure;
    src.sample = [spec](std::size_t n, std::uint64_t seed) {
      return sample_measure(spec, n, seed);
    };
    src.dimension = cfg.explicit_dim.value_or(spec.nominal_dimension());
    src.name = measure_name(spec);
    return src;
  }
  PointCloud cloud = ingest_point_cloud(cfg.cloud_csv);
  src.sample = [cloud](std::size_t n, std::uint64_t seed) {
    return subsample(cloud, n, seed);
  };
  if (!cfg.explicit_dim)
    throw ConfigError("csv input requires an explicit dimension d");
  src.dimension = *cfg.explicit_dim;
  src.name = cfg.cloud_csv;
  return src;
}

RegressionEstimate regression_over_ladder(const InputSource& src,
                                          std::size_t degree, double alpha,
                                          const std::vector<std::size_t>& ladder,
                                          std::size_t trials,
                                          std::uint64_t seed,
                                          std::size_t threads) {
  RegressionEstimate est;
  est.alpha = alpha;
  est.degree = degree;
  est.seed = seed;
  std::vector<double> log_n, log_mean;
  for (std::size_t rung = 0; rung < ladder.size(); ++rung) {
    const std::size_t n = ladder[rung];
    std::vector<double> values(trials);
    parallel_for_index(trials, threads, [&](std::size_t t) {
      PointCloud cloud = src.sample(n, derive_seed(seed, rung * trials + t));
      values[t] = alpha_weight_statistic(cloud, degree, alpha);
    });
    RungStat s;
    s.n = n;
    s.trials = trials;
    double sum = 0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(trials);
    double sq = 0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.variance = trials > 1 ? sq / static_cast<double>(trials - 1) : 0.0;
    est.rungs.push_back(s);
    if (!(s.mean > 0))
      throw std::runtime_error("statistic vanished at n=" + std::to_string(n));
    log_n.push_back(std::log(static_cast<double>(n)));
    log_mean.push_back(std::log(s.mean));
  }
  OlsFit fit = ols_fit(log_n, log_mean);
  est.beta = fit.slope;
  est.beta_std_error = fit.slope_std_error;
  if (est.beta >= 1.0 - 1e-6) throw std::runtime_error("estimator divergent");
  est.dim = alpha / (1.0 - est.beta);
  est.dim_std_error =
      alpha / ((1.0 - est.beta) * (1.0 - est.beta)) * est.beta_std_error;
  return est;
}

}  // namespace

std::string output_comment_header(const ExperimentConfig& cfg) {
  return "# config_hash=" + cfg.config_hash + " seed=" +
         std::to_string(cfg.seed) + "\n";
}

ConvergenceResult run_convergence_experiment(const ExperimentConfig& cfg) {
  if (cfg.kind != ExperimentKind::convergence)
    throw ConfigError("config kind is not convergence");
  InputSource src = resolve_input(cfg);
  const std::vector<std::size_t> ladder =
      cfg.n_ladder.empty() ? default_n_ladder(cfg.degree) : cfg.n_ladder;
  const std::size_t trials =
      cfg.trials ? cfg.trials : default_trials(cfg.degree);
  check_resource_guards(cfg, cfg.degree, ladder.back());

  const double d = src.dimension;
  const double exponent = (d - cfg.alpha) / d;

  ConvergenceResult result;
  result.d = d;
  std::ofstream detail = open_output(cfg, "convergence_detail.csv");
  detail << "n,trial,statistic,normalized\n";

  for (std::size_t rung = 0; rung < ladder.size(); ++rung) {
    const std::size_t n = ladder[rung];
    std::vector<double> stats(trials);
    parallel_for_index(trials, cfg.threads, [&](std::size_t t) {
      PointCloud cloud =
          src.sample(n, derive_seed(cfg.seed, rung * trials + t));
      stats[t] = alpha_weight_statistic(cloud, cfg.degree, cfg.alpha);
    });
    const double norm = std::pow(static_cast<double>(n), -exponent);
    ConvergenceRung r;
    r.n = n;
    r.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
      detail << n << "," << t << "," << stats[t] << "," << norm * stats[t]
             << "\n";
      r.mean += stats[t];
    }
    r.mean /= static_cast<double>(trials);
    for (double v : stats) r.variance += (v - r.mean) * (v - r.mean);
    r.variance =
        trials > 1 ? r.variance / static_cast<double>(trials - 1) : 0.0;
    r.mean_normalized = norm * r.mean;
    r.variance_normalized = norm * norm * r.variance;
    result.rungs.push_back(r);
  }

  std::ofstream summary = open_output(cfg, "convergence_summary.csv");
  summary << "n,mean,variance,mean_normalized,variance_normalized,trials\n";
  for (const ConvergenceRung& r : result.rungs)
    summary << r.n << "," << r.mean << "," << r.variance << ","
            << r.mean_normalized << "," << r.variance_normalized << ","
            << r.trials << "\n";
  return result;
}

OscillationResult run_oscillation_experiment(const ExperimentConfig& cfg) {
  if (cfg.kind != ExperimentKind::oscillation)
    throw ConfigError("config kind is not oscillation");
  MeasureSpec spec;
  spec.kind = MeasureKind::nested_schedule;
  spec.schedule = cfg.all_k_control
                      ? cantor_schedule(cfg.schedule_depth)
                      : canonical_oscillation_schedule(cfg.schedule_depth);

  // Rung n = 2^b probes level b of the schedule (2^b intervals). Levels in
  // [4k, 4k+4) for odd k sit after an L and before the matching Gamma, so
  // their intervals are a factor 5/7 thinner: phase 1. The default ladder
  // takes the last two levels of each phase: pilot runs show the statistic
  // lags the schedule by about a level, and the late rungs also keep the
  // small-n transient of the two phase groups comparable.
  std::vector<std::size_t> ladder = cfg.n_ladder;
  if (ladder.empty())
    for (std::size_t b : {6u, 7u, 9u, 10u, 13u, 14u, 17u, 18u})
      ladder.push_back(std::size_t{1} << b);
  std::sort(ladder.begin(), ladder.end());
  const std::size_t trials = cfg.trials ? cfg.trials : 8;

  const double d = kLog2OverLog3;
  const double exponent = (d - cfg.alpha) / d;

  OscillationResult result;
  for (std::size_t rung = 0; rung < ladder.size(); ++rung) {
    const std::size_t n = ladder[rung];
    const double b = std::log2(static_cast<double>(n));
    const std::size_t level = static_cast<std::size_t>(std::llround(b));
    OscillationRung r;
    r.n = n;
    r.trials = trials;
    r.aligned = std::abs(b - static_cast<double>(level)) < 1e-9 &&
                level + 1 < cfg.schedule_depth;
    if (!r.aligned)
      std::cerr << "warning: rung n=" << n
                << " is not aligned to a schedule level\n";
    r.phase = ((level / 4) % 2 == 1) ? 1 : 0;
    std::vector<double> stats(trials);
    parallel_for_index(trials, cfg.threads, [&](std::size_t t) {
      PointCloud cloud =
          sample_nested(spec.schedule, n, derive_seed(cfg.seed, rung * trials + t));
      stats[t] = alpha_weight_statistic(cloud, 0, cfg.alpha);
    });
    double norm = std::pow(static_cast<double>(n), -exponent);
    double mean = 0;
    for (double v : stats) mean += v;
    r.mean_normalized = norm * mean / static_cast<double>(trials);
    result.rungs.push_back(r);
  }

  double dip_sum = 0, base_sum = 0;
  std::size_t dips = 0, bases = 0;
  for (const OscillationRung& r : result.rungs) {
    if (r.phase == 1) {
      dip_sum += r.mean_normalized;
      ++dips;
    } else {
      base_sum += r.mean_normalized;
      ++bases;
    }
  }
  if (dips == 0 || bases == 0)
    throw ConfigError("oscillation ladder must contain rungs of both phases");
  result.dip_mean = dip_sum / static_cast<double>(dips);
  result.base_mean = base_sum / static_cast<double>(bases);
  result.ratio = result.dip_mean / result.base_mean;

  std::ofstream out = open_output(cfg, "oscillation.csv");
  out << "n,phase,mean_normalized,trials\n";
  for (const OscillationRung& r : result.rungs)
    out << r.n << "," << r.phase << "," << r.mean_normalized << ","
        << r.trials << "\n";
  std::ofstream summary = open_output(cfg, "oscillation_summary.csv");
  summary << "dip_mean,base_mean,ratio\n";
  summary << result.dip_mean << "," << result.base_mean << "," << result.ratio
          << "\n";
  return result;
}

CountScalingResult run_count_scaling_experiment(const ExperimentConfig& cfg) {
  if (cfg.kind != ExperimentKind::count_scaling)
    throw ConfigError("config kind is not count-scaling");
  InputSource src = resolve_input(cfg);
  std::vector<std::size_t> ladder = cfg.n_ladder;
  if (ladder.empty()) ladder = {200, 400, 800, 1600};
  const std::size_t trials = cfg.trials ? cfg.trials : 30;
  check_resource_guards(cfg, cfg.degree, ladder.back());

  CountScalingResult result;
  for (std::size_t rung = 0; rung < ladder.size(); ++rung) {
    const std::size_t n = ladder[rung];
    std::vector<double> counts(trials);
    parallel_for_index(trials, cfg.threads, [&](std::size_t t) {
      PointCloud cloud =
          src.sample(n, derive_seed(cfg.seed, rung * trials + t));
      DistanceMatrix d = pairwise_distances(cloud);
      Barcode b = rips_persistence(d, cfg.degree);
      counts[t] = static_cast<double>(b.degree(cfg.degree).size());
    });
    double mean = 0;
    for (double c : counts) mean += c;
    mean /= static_cast<double>(trials);
    double var = 0;
    for (double c : counts) var += (c - mean) * (c - mean);
    var = trials > 1 ? var / static_cast<double>(trials - 1) : 0.0;
    CountScalingRung r;
    r.n = n;
    r.trials = trials;
    r.mean_over_n = mean / static_cast<double>(n);
    r.var_over_n2 = var / (static_cast<double>(n) * static_cast<double>(n));
    result.rungs.push_back(r);
  }

  std::ofstream out = open_output(cfg, "count_scaling.csv");
  out << "n,mean_count_over_n,var_count_over_n2,trials\n";
  for (const CountScalingRung& r : result.rungs)
    out << r.n << "," << r.mean_over_n << "," << r.var_over_n2 << ","
        << r.trials << "\n";
  return result;
}

OccupancyResult run_occupancy_experiment(const ExperimentConfig& cfg) {
  if (cfg.kind != ExperimentKind::occupancy)
    throw ConfigError("config kind is not occupancy");
  OccupancyResult result =
      simulate_occupancy_lln(cfg.occupancy, cfg.seed, cfg.threads);
  std::ofstream out = open_output(cfg, "occupancy.csv");
  out << "n,empirical_mean,analytic_gamma,stderr,trials\n";
  out << result.n << "," << result.empirical_mean << ","
      << result.analytic_gamma << "," << result.std_error << ","
      << result.trials << "\n";
  return result;
}

DimensionReportResult run_dimension_report(const ExperimentConfig& cfg) {
  if (cfg.kind != ExperimentKind::dimension_report)
    throw ConfigError("config kind is not dimension-report");
  InputSource src = resolve_input(cfg);
  const std::vector<std::size_t> ladder =
      cfg.n_ladder.empty() ? default_n_ladder(cfg.degree) : cfg.n_ladder;
  const std::size_t trials =
      cfg.trials ? cfg.trials : default_trials(cfg.degree);
  check_resource_guards(cfg, cfg.degree, ladder.back());

  DimensionReportResult result;
  result.ph = regression_over_ladder(src, cfg.degree, cfg.alpha, ladder,
                                     trials, cfg.seed, cfg.threads);
  result.reports.push_back(to_report(result.ph));

  // Comparators run on one larger cloud from the same source.
  const std::size_t comparator_n = std::max<std::size_t>(ladder.back(), 10000);
  PointCloud cloud;
  try {
    cloud = src.sample(comparator_n, derive_seed(cfg.seed, 1000001));
  } catch (const std::runtime_error&) {
    cloud = src.sample(ladder.back(), derive_seed(cfg.seed, 1000001));
  }
  std::vector<double> delta_ladder = default_delta_ladder(cloud);
  DimensionReport box = box_dimension_estimate(cloud, delta_ladder);
  box.seed = cfg.seed;
  result.reports.push_back(box);
  DimensionReport corr = correlation_dimension_estimate(
      subsample(cloud, std::min<std::size_t>(cloud.size(), 4000),
                derive_seed(cfg.seed, 1000002)),
      delta_ladder);
  corr.seed = cfg.seed;
  result.reports.push_back(corr);

  std::ofstream report = open_output(cfg, "dimension_report.csv");
  report << "method,estimate,stderr,param_alpha,param_i,seed\n";
  for (const DimensionReport& r : result.reports)
    report << r.method << "," << r.estimate << "," << r.std_error << ","
           << r.param_alpha << "," << r.param_i << "," << r.seed << "\n";
  std::ofstream rungs = open_output(cfg, "ph_rungs.csv");
  rungs << "n,mean,variance,trials\n";
  for (const RungStat& s : result.ph.rungs)
    rungs << s.n << "," << s.mean << "," << s.variance << "," << s.trials
          << "\n";
  return result;
}

PointCloud ingest_point_cloud(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  PointCloud cloud;
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  bool saw_header_candidate = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = line;
    if (!t.empty() && t.back() == '\r') t.pop_back();
    if (t.empty() || t[0] == '#') continue;
    std::vector<double> row;
    bool non_numeric = false;
    std::string bad_cell;
    std::stringstream ss(t);
    std::string cell;
    while (std::getline(ss, cell, ',') && !non_numeric) {
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        non_numeric = true;
        break;
      }
      while (used < cell.size() &&
             std::isspace(static_cast<unsigned char>(cell[used])))
        ++used;
      if (used != cell.size()) {
        non_numeric = true;
        break;
      }
      if (!std::isfinite(v)) {
        // "NaN"/"inf" parse as numbers but are invalid coordinates; a
        // header line, by contrast, fails to parse at all.
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": non-finite value '" + cell + "'");
      }
      row.push_back(v);
    }
    if (non_numeric) {
      // A single leading non-numeric row is accepted as a header.
      if (!saw_header_candidate && cloud.empty()) {
        saw_header_candidate = true;
        continue;
      }
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": malformed row '" + t + "'");
    }
    if (row.empty())
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": empty row");
    if (dim == 0) dim = row.size();
    if (row.size() != dim)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected " + std::to_string(dim) +
                               " columns, got " + std::to_string(row.size()));
    if (cloud.empty() && cloud.dim() == 0) cloud = PointCloud(dim, {});
    cloud.push_back(row);
  }
  if (cloud.empty()) throw std::runtime_error("empty input");
  return cloud;
}

}  // namespace phdim
