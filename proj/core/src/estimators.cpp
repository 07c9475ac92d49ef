#include "phdim/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "phdim/barcode.hpp"
#include "phdim/counting.hpp"
#include "phdim/distance.hpp"
#include "phdim/mst.hpp"
#include "phdim/parallel.hpp"
#include "phdim/rips.hpp"
#include "phdim/rng.hpp"

namespace phdim {

namespace {

void check_ladder(std::size_t rungs) {
  if (rungs < 4) throw std::invalid_argument("degenerate ladder");
}

template <typename T>
void check_increasing(const std::vector<T>& ladder) {
  check_ladder(ladder.size());
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    if (!(ladder[k] > 0)) throw std::invalid_argument("degenerate ladder");
    if (k > 0 && !(ladder[k] > ladder[k - 1]))
      throw std::invalid_argument("degenerate ladder");
  }
}

RungStat summarize(std::size_t n, const std::vector<double>& values) {
  RungStat s;
  s.n = n;
  s.trials = values.size();
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double sq = 0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.variance =
      values.size() > 1 ? sq / static_cast<double>(values.size() - 1) : 0.0;
  return s;
}

}  // namespace

OlsFit ols_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("degenerate ladder");
  const double m = static_cast<double>(x.size());
  double xbar = 0, ybar = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    xbar += x[k];
    ybar += y[k];
  }
  xbar /= m;
  ybar /= m;
  double sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - xbar) * (x[k] - xbar);
    sxy += (x[k] - xbar) * (y[k] - ybar);
  }
  if (sxx <= 0) throw std::invalid_argument("degenerate ladder");
  OlsFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = ybar - fit.slope * xbar;
  if (x.size() > 2) {
    double rss = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      double r = y[k] - (fit.intercept + fit.slope * x[k]);
      rss += r * r;
    }
    fit.slope_std_error = std::sqrt(rss / (m - 2) / sxx);
  }
  return fit;
}

std::vector<std::size_t> default_n_ladder(std::size_t degree) {
  std::vector<std::size_t> ladder;
  if (degree == 0)
    for (std::size_t b = 8; b <= 13; ++b) ladder.push_back(std::size_t{1} << b);
  else
    for (std::size_t b = 7; b <= 10; ++b) ladder.push_back(std::size_t{1} << b);
  return ladder;
}

std::size_t default_trials(std::size_t degree) { return degree == 0 ? 20 : 10; }

double alpha_weight_statistic(const PointCloud& cloud, std::size_t degree,
                              double alpha) {
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be > 0");
  if (degree == 0) {
    if (cloud.dim() == 1) {
      // One-dimensional MST edges are the gaps between sorted coordinates.
      std::vector<double> xs = cloud.coords();
      std::sort(xs.begin(), xs.end());
      double s = 0;
      for (std::size_t k = 1; k < xs.size(); ++k)
        s += std::pow(xs[k] - xs[k - 1], alpha);
      return s;
    }
    return mst_alpha_weight(minimum_spanning_tree(cloud), alpha);
  }
  DistanceMatrix d = pairwise_distances(cloud);
  Barcode b = rips_persistence(d, degree);
  return barcode_alpha_weight(b, degree, alpha, 0.0);
}

RegressionEstimate ph_dimension_estimate(
    const MeasureSpec& spec, std::size_t degree, double alpha,
    const std::vector<std::size_t>& n_ladder, std::size_t trials,
    std::uint64_t seed, std::size_t threads) {
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be > 0");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  check_increasing(n_ladder);
  spec.validate();

  RegressionEstimate est;
  est.alpha = alpha;
  est.degree = degree;
  est.seed = seed;

  std::vector<double> log_n, log_mean;
  for (std::size_t rung = 0; rung < n_ladder.size(); ++rung) {
    const std::size_t n = n_ladder[rung];
    std::vector<double> values(trials);
    parallel_for_index(trials, threads, [&](std::size_t t) {
      std::uint64_t trial_seed = derive_seed(seed, rung * trials + t);
      PointCloud cloud = sample_measure(spec, n, trial_seed);
      values[t] = alpha_weight_statistic(cloud, degree, alpha);
    });
    RungStat s = summarize(n, values);
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

DimensionReport to_report(const RegressionEstimate& e) {
  DimensionReport r;
  r.method = "ph(" + std::to_string(e.degree) + "," + std::to_string(e.alpha) +
             ")";
  r.estimate = e.dim;
  r.std_error = e.dim_std_error;
  r.param_alpha = e.alpha;
  r.param_i = static_cast<long>(e.degree);
  r.seed = e.seed;
  for (const RungStat& s : e.rungs)
    r.ladder.push_back(static_cast<double>(s.n));
  return r;
}

std::vector<double> default_delta_ladder(const PointCloud& cloud) {
  if (cloud.empty()) throw std::invalid_argument("empty input");
  std::vector<double> lo = cloud.min_corner(), hi = cloud.max_corner();
  double diameter_sq = 0;
  for (std::size_t k = 0; k < lo.size(); ++k)
    diameter_sq += (hi[k] - lo[k]) * (hi[k] - lo[k]);
  double top = std::sqrt(diameter_sq) / 4.0;
  if (!(top > 0)) top = 1.0;
  std::vector<double> ladder(6);
  // Two decades below `top`, six geometric rungs.
  const double ratio = std::pow(100.0, 1.0 / 5.0);
  double delta = top / 100.0;
  for (std::size_t k = 0; k < 6; ++k) {
    ladder[k] = delta;
    delta *= ratio;
  }
  return ladder;
}

DimensionReport box_dimension_estimate(const PointCloud& cloud,
                                       const std::vector<double>& delta_ladder) {
  if (cloud.empty()) throw std::invalid_argument("empty input");
  check_increasing(delta_ladder);
  std::vector<double> x, y;
  for (double delta : delta_ladder) {
    BallCountResult c = count_scale(cloud, delta, CountMode::grid_boxes);
    x.push_back(-std::log(delta));
    y.push_back(std::log(static_cast<double>(c.count)));
  }
  OlsFit fit = ols_fit(x, y);
  DimensionReport r;
  r.method = "box";
  r.estimate = fit.slope;
  r.std_error = fit.slope_std_error;
  r.ladder = delta_ladder;
  return r;
}

DimensionReport correlation_dimension_estimate(
    const PointCloud& cloud, const std::vector<double>& r_ladder) {
  const std::size_t n = cloud.size();
  if (n < 2) throw std::invalid_argument("need at least 2 points");
  check_increasing(r_ladder);
  // One streaming pass over the pairs; the n x n matrix would not fit in
  // memory at the sample sizes this comparator is run with.
  std::vector<std::size_t> within(r_ladder.size(), n);  // n diagonal pairs
  double dmax = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double dist = point_distance(cloud.point(i), cloud.point(j));
      dmax = std::max(dmax, dist);
      for (std::size_t k = 0; k < r_ladder.size(); ++k)
        if (dist <= r_ladder[k]) within[k] += 2;
    }
  if (dmax == 0) throw std::runtime_error("all pairs coincident");
  std::vector<double> x, y;
  for (std::size_t k = 0; k < r_ladder.size(); ++k) {
    double c = static_cast<double>(within[k]) /
               (static_cast<double>(n) * static_cast<double>(n));
    x.push_back(std::log(r_ladder[k]));
    y.push_back(std::log(c));
  }
  OlsFit fit = ols_fit(x, y);
  DimensionReport rep;
  rep.method = "correlation";
  rep.estimate = fit.slope;
  rep.std_error = fit.slope_std_error;
  rep.ladder = r_ladder;
  return rep;
}

AhlforsReport ahlfors_regularity_diagnostic(
    const MeasureSpec& spec, double d, const std::vector<double>& delta_ladder,
    std::size_t centers, std::size_t n, std::uint64_t seed,
    const AhlforsOptions& opts) {
  if (!(d > 0)) throw std::invalid_argument("d must be > 0");
  if (centers < 1 || n < 1) throw std::invalid_argument("need samples");
  check_increasing(delta_ladder);
  spec.validate();
  const double delta_min = delta_ladder.front();
  if (static_cast<double>(n) * std::pow(delta_min, d) < 30.0)
    throw std::runtime_error("underpowered");

  PointCloud reference = sample_measure(spec, n, derive_seed(seed, 0));
  PointCloud probe = sample_measure(spec, centers, derive_seed(seed, 1));

  AhlforsReport report;
  std::vector<double> log_delta, log_mean;
  for (double delta : delta_ladder) {
    AhlforsLevel level;
    level.delta = delta;
    level.min_ratio = std::numeric_limits<double>::infinity();
    double sum = 0;
    for (std::size_t c = 0; c < centers; ++c) {
      std::size_t inside = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (point_distance(probe.point(c), reference.point(j)) <= delta)
          ++inside;
      double mass = static_cast<double>(inside) / static_cast<double>(n);
      double ratio = mass / std::pow(delta, d);
      level.min_ratio = std::min(level.min_ratio, ratio);
      level.max_ratio = std::max(level.max_ratio, ratio);
      sum += ratio;
    }
    level.mean_ratio = sum / static_cast<double>(centers);
    report.levels.push_back(level);
    log_delta.push_back(std::log(delta));
    log_mean.push_back(level.mean_ratio > 0 ? std::log(level.mean_ratio)
                                            : std::log(1e-300));
  }

  report.min_ratio = std::numeric_limits<double>::infinity();
  for (const AhlforsLevel& level : report.levels) {
    report.min_ratio = std::min(report.min_ratio, level.min_ratio);
    report.max_ratio = std::max(report.max_ratio, level.max_ratio);
  }
  report.drift_slope = ols_fit(log_delta, log_mean).slope;

  bool bounded = report.min_ratio > 0 &&
                 report.max_ratio / report.min_ratio <= opts.spread_threshold;
  bool flat = std::abs(report.drift_slope) <= opts.drift_tolerance;
  report.regular_consistent = bounded && flat;
  report.verdict = report.regular_consistent ? "regular-consistent"
                                             : "inconsistent";
  return report;
}

void write_dimension_report_csv(const std::vector<DimensionReport>& reports,
                                const std::string& path,
                                const std::string& comment_header) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (!comment_header.empty()) out << comment_header;
  out << "method,estimate,stderr,param_alpha,param_i,seed\n";
  out.precision(17);
  for (const DimensionReport& r : reports)
    out << r.method << "," << r.estimate << "," << r.std_error << ","
        << r.param_alpha << "," << r.param_i << "," << r.seed << "\n";
}

void write_rung_detail_csv(const RegressionEstimate& e, const std::string& path,
                           const std::string& comment_header) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (!comment_header.empty()) out << comment_header;
  out << "n,mean,variance,trials\n";
  out.precision(17);
  for (const RungStat& s : e.rungs)
    out << s.n << "," << s.mean << "," << s.variance << "," << s.trials
        << "\n";
}

}  // namespace phdim
