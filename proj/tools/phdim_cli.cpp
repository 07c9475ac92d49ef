// Command-line surface: sample clouds from the shipped measures, compute
// minimum spanning trees and persistence barcodes, estimate fractal
// dimensions, and run the configuration-driven experiments.
//
// Exit codes: 0 success, 2 configuration error, 3 resource-guard violation.

#include <cstdint>
#include <filesystem>
#include <limits>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phdim/barcode.hpp"
#include "phdim/config.hpp"
#include "phdim/distance.hpp"
#include "phdim/estimators.hpp"
#include "phdim/experiments.hpp"
#include "phdim/filtration.hpp"
#include "phdim/measure.hpp"
#include "phdim/mst.hpp"
#include "phdim/occupancy.hpp"
#include "phdim/reduction.hpp"
#include "phdim/rips.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitGuard = 3;

struct MeasureFlags {
  std::string name = "cantor-middle-thirds";
  double beta = -1;
  std::size_t ambient_dim = 0;
  double R = -1, r = -1, offset = -1, prob = -1;
  std::size_t depth = 0;
  std::string schedule;

  void attach(CLI::App* cmd) {
    cmd->add_option("--measure", name, "Measure name (e.g. cantor-middle-thirds)");
    cmd->add_option("--beta", beta, "Removed fraction for cantor-middle-beta");
    cmd->add_option("--ambient-dim", ambient_dim,
                    "Ambient dimension for cantor-dust / uniform-cube");
    cmd->add_option("--major-radius", R, "Torus major radius");
    cmd->add_option("--minor-radius", r, "Torus minor radius");
    cmd->add_option("--offset", offset, "Stacked-tori translation offset");
    cmd->add_option("--prob", prob, "Stacked-tori translation probability");
    cmd->add_option("--depth", depth, "Descent depth for nested samplers");
    cmd->add_option("--schedule", schedule,
                    "Nested-schedule ops as a K/L/G string");
  }

  phdim::MeasureSpec resolve() const {
    phdim::MeasureSpec spec = phdim::measure_from_name(name);
    if (beta >= 0) spec.beta = beta;
    if (ambient_dim > 0) spec.ambient_dim = ambient_dim;
    if (R >= 0) spec.R = R;
    if (r >= 0) spec.r = r;
    if (offset >= 0) spec.offset = offset;
    if (prob >= 0) spec.prob = prob;
    if (depth > 0) spec.depth = depth;
    if (!schedule.empty()) {
      phdim::IntervalSchedule s;
      for (char c : schedule) {
        if (c == 'K') s.ops.push_back(phdim::op_K());
        else if (c == 'L') s.ops.push_back(phdim::op_L());
        else if (c == 'G') s.ops.push_back(phdim::op_Gamma());
        else throw phdim::ConfigError("schedule ops must be K, L, or G");
      }
      spec.schedule = s;
    }
    spec.validate();
    return spec;
  }
};

std::string out_path(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / name).string();
}

std::string seed_header(std::uint64_t seed, const std::string& extra = "") {
  return "# seed=" + std::to_string(seed) + extra + "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Fractal dimension estimation via weighted persistent homology"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::size_t threads = 1;
  std::string config_path;
  app.add_option("--seed", seed, "Master random seed")->capture_default_str();
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for trial fan-out")
      ->capture_default_str();
  app.add_option("--config", config_path, "TOML config file");

  // sample
  auto* sample = app.add_subcommand("sample", "Draw i.i.d. samples from a measure");
  MeasureFlags sample_measure_flags;
  sample_measure_flags.attach(sample);
  std::size_t sample_n = 1000;
  sample->add_option("-n,--count", sample_n, "Number of samples")
      ->capture_default_str();

  // mst
  auto* mst = app.add_subcommand("mst", "Minimum spanning tree of a point cloud");
  std::string mst_input;
  mst->add_option("--input", mst_input, "Point-cloud CSV")->required();

  // ph
  auto* ph = app.add_subcommand("ph", "Persistence barcode of a point cloud");
  std::string ph_input, ph_flavor = "rips";
  std::size_t ph_max_degree = 1;
  double ph_max_scale = 0;
  ph->add_option("--input", ph_input, "Point-cloud CSV")->required();
  ph->add_option("--flavor", ph_flavor, "rips or cech")->capture_default_str();
  ph->add_option("--max-degree", ph_max_degree, "Top homology degree")
      ->capture_default_str();
  ph->add_option("--max-scale", ph_max_scale,
                 "Filtration truncation (0 = enclosing radius)");

  // estimate
  auto* estimate = app.add_subcommand(
      "estimate", "PH, box, and correlation dimension estimates");
  MeasureFlags estimate_measure_flags;
  estimate_measure_flags.attach(estimate);
  std::size_t est_degree = 0;
  double est_alpha = 1.0;
  std::size_t est_trials = 0;
  std::vector<std::size_t> est_ladder;
  estimate->add_option("-i,--degree", est_degree, "Homology degree")
      ->capture_default_str();
  estimate->add_option("--alpha", est_alpha, "Interval-length exponent")
      ->capture_default_str();
  estimate->add_option("--trials", est_trials, "Trials per rung (0 = default)");
  estimate->add_option("--ladder", est_ladder, "Sample-size ladder");

  // experiment <kind>
  auto* experiment =
      app.add_subcommand("experiment", "Run a configured experiment");
  std::string experiment_kind;
  experiment->add_option("kind", experiment_kind,
                         "convergence | oscillation | count-scaling | "
                         "occupancy | dimension-report")
      ->required();

  // occupancy
  auto* occupancy =
      app.add_subcommand("occupancy", "Occupancy-indicator law of large numbers");
  phdim::OccupancyConfig occ;
  occupancy->add_option("-a", occ.a, "Block density a")->capture_default_str();
  occupancy->add_option("-p", occ.p, "B-set mass parameter p")
      ->capture_default_str();
  occupancy->add_option("-q", occ.q, "A-set mass parameter q")
      ->capture_default_str();
  occupancy->add_option("-r", occ.r, "B-sets per block")->capture_default_str();
  occupancy->add_option("-n,--count", occ.n, "Samples per trial")
      ->capture_default_str();
  occupancy->add_option("--trials", occ.trials, "Number of trials")
      ->capture_default_str();

  // Let --seed/--out/--threads/--config appear after the subcommand too.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (sample->parsed()) {
    phdim::MeasureSpec spec = sample_measure_flags.resolve();
    phdim::PointCloud cloud = phdim::sample_measure(spec, sample_n, seed);
    std::string path = out_path(out_dir, "points.csv");
    phdim::write_point_cloud_csv(
        cloud, path,
        seed_header(seed, " measure=" + phdim::measure_name(spec)));
    std::cout << "wrote " << cloud.size() << " points to " << path << "\n";
    return kExitOk;
  }

  if (mst->parsed()) {
    phdim::PointCloud cloud = phdim::ingest_point_cloud(mst_input);
    phdim::MstEdges edges =
        phdim::minimum_spanning_tree(phdim::pairwise_distances(cloud));
    std::string path = out_path(out_dir, "mst_edges.csv");
    std::ofstream out(path);
    out << seed_header(seed) << "edge_length\n";
    out.precision(17);
    for (double len : edges.lengths) out << len << "\n";
    if (edges.has_zero_length)
      std::cerr << "warning: input contains duplicate points\n";
    std::cout << "wrote " << edges.lengths.size() << " edges to " << path
              << "\n";
    return kExitOk;
  }

  if (ph->parsed()) {
    phdim::PointCloud cloud = phdim::ingest_point_cloud(ph_input);
    phdim::Barcode barcode;
    if (ph_flavor == "rips") {
      phdim::DistanceMatrix d = phdim::pairwise_distances(cloud);
      double threshold = ph_max_scale > 0
                             ? ph_max_scale
                             : std::numeric_limits<double>::infinity();
      barcode = phdim::rips_persistence(d, ph_max_degree, threshold);
    } else if (ph_flavor == "cech") {
      double scale = ph_max_scale;
      if (scale <= 0)
        scale = phdim::enclosing_radius(phdim::pairwise_distances(cloud));
      barcode = phdim::compute_persistence(
          phdim::build_cech_filtration(cloud, ph_max_degree + 1, scale));
    } else {
      throw phdim::ConfigError("flavor must be rips or cech");
    }
    std::string path = out_path(out_dir, "barcode.csv");
    phdim::write_barcode_csv(barcode, path, seed_header(seed));
    std::size_t total = 0;
    for (const auto& deg : barcode.by_degree) total += deg.size();
    std::cout << "wrote " << total << " intervals to " << path << "\n";
    return kExitOk;
  }

  if (estimate->parsed()) {
    phdim::ExperimentConfig cfg;
    cfg.kind = phdim::ExperimentKind::dimension_report;
    cfg.measure = estimate_measure_flags.resolve();
    cfg.degree = est_degree;
    cfg.alpha = est_alpha;
    cfg.trials = est_trials;
    cfg.n_ladder = est_ladder;
    cfg.seed = seed;
    cfg.out_dir = out_dir;
    cfg.threads = threads;
    std::ostringstream canonical;
    canonical << "estimate " << phdim::measure_name(*cfg.measure) << " i="
              << est_degree << " alpha=" << est_alpha;
    cfg.config_hash = phdim::config_hash_hex(canonical.str());
    cfg.validate();
    phdim::DimensionReportResult result = phdim::run_dimension_report(cfg);
    for (const phdim::DimensionReport& r : result.reports)
      std::cout << r.method << ": " << r.estimate << " +/- " << r.std_error
                << "\n";
    return kExitOk;
  }

  if (experiment->parsed()) {
    if (config_path.empty())
      throw phdim::ConfigError("experiment requires --config <path>");
    phdim::ExperimentConfig cfg = phdim::load_experiment_config(config_path);
    if (cfg.kind != phdim::experiment_kind_from_name(experiment_kind))
      throw phdim::ConfigError("config kind '" +
                               phdim::experiment_kind_name(cfg.kind) +
                               "' does not match subcommand '" +
                               experiment_kind + "'");
    if (app.count("--seed")) cfg.seed = seed;
    if (app.count("--out")) cfg.out_dir = out_dir;
    if (app.count("--threads")) cfg.threads = threads;
    switch (cfg.kind) {
      case phdim::ExperimentKind::convergence:
        phdim::run_convergence_experiment(cfg);
        break;
      case phdim::ExperimentKind::oscillation: {
        phdim::OscillationResult r = phdim::run_oscillation_experiment(cfg);
        std::cout << "phase ratio: " << r.ratio << "\n";
        break;
      }
      case phdim::ExperimentKind::count_scaling:
        phdim::run_count_scaling_experiment(cfg);
        break;
      case phdim::ExperimentKind::occupancy: {
        phdim::OccupancyResult r = phdim::run_occupancy_experiment(cfg);
        std::cout << "empirical mean " << r.empirical_mean << " vs gamma "
                  << r.analytic_gamma << "\n";
        break;
      }
      case phdim::ExperimentKind::dimension_report:
        phdim::run_dimension_report(cfg);
        break;
    }
    std::cout << "outputs written to " << cfg.out_dir << "\n";
    return kExitOk;
  }

  if (occupancy->parsed()) {
    phdim::OccupancyResult result =
        phdim::simulate_occupancy_lln(occ, seed, threads);
    std::string path = out_path(out_dir, "occupancy.csv");
    std::ofstream out(path);
    out << seed_header(seed)
        << "n,empirical_mean,analytic_gamma,stderr,trials\n";
    out.precision(17);
    out << result.n << "," << result.empirical_mean << ","
        << result.analytic_gamma << "," << result.std_error << ","
        << result.trials << "\n";
    std::cout << "empirical mean " << result.empirical_mean << " vs gamma "
              << result.analytic_gamma << " (stderr " << result.std_error
              << ")\n";
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const phdim::ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const phdim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
