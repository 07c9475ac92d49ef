#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "phdim/config.hpp"
#include "phdim/experiments.hpp"

using namespace phdim;

namespace {

namespace fs = std::filesystem;

std::string temp_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p.string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig config_from(const std::string& text) {
  return experiment_config_from_toml(parse_toml_string(text), text);
}

#ifdef PHDIM_CLI_PATH
int run_cli(const std::string& args) {
  std::string cmd = std::string(PHDIM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}
#endif

}  // namespace

TEST_CASE("ingest: three rows of two columns") {
  std::string path = write_temp("phdim_ingest_ok.csv", "0,1\n2,3\n4,5\n");
  PointCloud cloud = ingest_point_cloud(path);
  CHECK(cloud.size() == 3);
  CHECK(cloud.dim() == 2);
  CHECK(cloud.point(2)[1] == doctest::Approx(5.0));
  std::remove(path.c_str());
}

TEST_CASE("ingest accepts a header line and comments") {
  std::string path =
      write_temp("phdim_ingest_header.csv", "# comment\nx1,x2\n1,2\n3,4\n");
  PointCloud cloud = ingest_point_cloud(path);
  CHECK(cloud.size() == 2);
  std::remove(path.c_str());
}

TEST_CASE("ingest names the row containing NaN") {
  std::string path = write_temp("phdim_ingest_nan.csv", "1,2\nNaN,4\n");
  CHECK_THROWS_WITH_AS(ingest_point_cloud(path), doctest::Contains("line 2"),
                       std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("ingest rejects empty files and ragged rows") {
  std::string empty = write_temp("phdim_ingest_empty.csv", "");
  CHECK_THROWS_WITH_AS(ingest_point_cloud(empty), "empty input",
                       std::runtime_error);
  std::remove(empty.c_str());
  std::string ragged = write_temp("phdim_ingest_ragged.csv", "1,2\n3,4,5\n");
  CHECK_THROWS_WITH_AS(ingest_point_cloud(ragged), doctest::Contains("line 2"),
                       std::runtime_error);
  std::remove(ragged.c_str());
}

TEST_CASE("convergence experiment writes reproducible outputs") {
  std::string out1 = temp_dir("phdim_conv1");
  std::string base =
      "[experiment]\nkind = \"convergence\"\nseed = 11\nout = \"{OUT}\"\n"
      "[measure]\nname = \"cantor-middle-thirds\"\n"
      "[statistic]\ni = 0\nalpha = 0.5\nn_ladder = [64, 128, 256, 512]\n"
      "trials = 4\n";
  auto with_out = [&](const std::string& text, const std::string& dir) {
    std::string s = text;
    s.replace(s.find("{OUT}"), 5, dir);
    return s;
  };
  ExperimentConfig cfg1 = config_from(with_out(base, out1));
  ConvergenceResult r1 = run_convergence_experiment(cfg1);
  REQUIRE(r1.rungs.size() == 4);
  CHECK(r1.d == doctest::Approx(0.6309).epsilon(1e-3));
  // Normalized means sit in a narrow band when the exponent matches.
  double lo = 1e300, hi = 0;
  for (const auto& rung : r1.rungs) {
    lo = std::min(lo, rung.mean_normalized);
    hi = std::max(hi, rung.mean_normalized);
  }
  CHECK(hi / lo <= 3.0);

  // Byte reproducibility: same config (same hash), different directory.
  std::string out2 = temp_dir("phdim_conv2");
  ExperimentConfig cfg2 = config_from(with_out(base, out1));
  cfg2.out_dir = out2;  // directory change only; hash covers the original
  cfg2.config_hash = cfg1.config_hash;
  run_convergence_experiment(cfg2);
  CHECK(slurp(out1 + "/convergence_detail.csv") ==
        slurp(out2 + "/convergence_detail.csv"));
  CHECK(slurp(out1 + "/convergence_summary.csv") ==
        slurp(out2 + "/convergence_summary.csv"));

  // Thread fan-out never changes bytes.
  std::string out3 = temp_dir("phdim_conv3");
  ExperimentConfig cfg3 = cfg2;
  cfg3.out_dir = out3;
  cfg3.threads = 4;
  run_convergence_experiment(cfg3);
  CHECK(slurp(out1 + "/convergence_detail.csv") ==
        slurp(out3 + "/convergence_detail.csv"));

  // Every artifact embeds the config hash and seed.
  std::string head = slurp(out1 + "/convergence_summary.csv");
  CHECK(head.find("# config_hash=" + cfg1.config_hash) != std::string::npos);
  CHECK(head.find("seed=11") != std::string::npos);
  fs::remove_all(out1);
  fs::remove_all(out2);
  fs::remove_all(out3);
}

TEST_CASE("count-scaling resource guard trips and can be overridden") {
  std::string out = temp_dir("phdim_guard");
  std::string text =
      "[experiment]\nkind = \"count-scaling\"\nseed = 1\nout = \"" + out +
      "\"\n[measure]\nname = \"uniform-cube\"\nambient_dim = 2\n"
      "[statistic]\ni = 2\nn_ladder = [100, 200, 300, 500]\ntrials = 1\n";
  ExperimentConfig cfg = config_from(text);
  CHECK_THROWS_AS(run_count_scaling_experiment(cfg), ResourceGuardError);
  cfg.override_guards = true;
  cfg.n_ladder = {8, 12, 16, 24};  // keep the override run tiny
  CHECK_NOTHROW(run_count_scaling_experiment(cfg));
  fs::remove_all(out);
}

TEST_CASE("count-scaling on two points has no cycles") {
  std::string out = temp_dir("phdim_count2");
  std::string text =
      "[experiment]\nkind = \"count-scaling\"\nseed = 1\nout = \"" + out +
      "\"\n[measure]\nname = \"uniform-cube\"\nambient_dim = 2\n"
      "[statistic]\ni = 1\nn_ladder = [2, 3, 4, 5]\ntrials = 3\n";
  CountScalingResult r = run_count_scaling_experiment(config_from(text));
  CHECK(r.rungs[0].mean_over_n == doctest::Approx(0.0));
  CHECK(r.rungs[0].var_over_n2 == doctest::Approx(0.0));
  fs::remove_all(out);
}

TEST_CASE("oscillation experiment labels phases and reports a ratio") {
  std::string out = temp_dir("phdim_osc");
  std::string text =
      "[experiment]\nkind = \"oscillation\"\nseed = 21\nout = \"" + out +
      "\"\n[statistic]\nalpha = 0.5\nn_ladder = [32, 64, 512, 1024]\n"
      "trials = 3\n[oscillation]\ndepth = 14\n";
  OscillationResult r = run_oscillation_experiment(config_from(text));
  REQUIRE(r.rungs.size() == 4);
  CHECK(r.rungs[0].phase == 1);  // n=2^5, level 5 follows the L at level 4
  CHECK(r.rungs[1].phase == 1);
  CHECK(r.rungs[2].phase == 0);  // n=2^9, level 9 follows the Gamma at 8
  CHECK(r.rungs[3].phase == 0);
  CHECK(r.ratio > 0);
  CHECK(slurp(out + "/oscillation_summary.csv").find("ratio") !=
        std::string::npos);
  fs::remove_all(out);
}

TEST_CASE("occupancy experiment writes the result csv") {
  std::string out = temp_dir("phdim_occ");
  std::string text =
      "[experiment]\nkind = \"occupancy\"\nseed = 2\nout = \"" + out +
      "\"\n[occupancy]\na = 0.5\np = 0.5\nq = 0.3\nr = 2\nn = 5000\n"
      "trials = 10\n";
  OccupancyResult r = run_occupancy_experiment(config_from(text));
  CHECK(r.analytic_gamma == doctest::Approx(0.057346).epsilon(1e-4));
  std::string csv = slurp(out + "/occupancy.csv");
  CHECK(csv.find("n,empirical_mean,analytic_gamma,stderr,trials") !=
        std::string::npos);
  fs::remove_all(out);
}

TEST_CASE("dimension report from an ingested csv subsample") {
  MeasureSpec spec = measure_from_name("uniform-cube");
  spec.ambient_dim = 2;
  PointCloud cloud = sample_measure(spec, 3000, 17);
  std::string csv_path = write_temp("phdim_report_cloud.csv", "");
  write_point_cloud_csv(cloud, csv_path);
  std::string out = temp_dir("phdim_report");
  std::string text =
      "[experiment]\nkind = \"dimension-report\"\nseed = 3\nout = \"" + out +
      "\"\n[input]\ncsv = \"" + csv_path +
      "\"\ndim = 2\n[statistic]\ni = 0\nalpha = 1.0\n"
      "n_ladder = [128, 256, 512, 1024]\ntrials = 4\n";
  DimensionReportResult r = run_dimension_report(config_from(text));
  REQUIRE(r.reports.size() == 3);
  CHECK(r.reports[0].method.rfind("ph(", 0) == 0);
  CHECK(r.reports[1].method == "box");
  CHECK(r.reports[2].method == "correlation");
  CHECK(r.reports[0].estimate == doctest::Approx(2.0).epsilon(0.2));
  std::string report_csv = slurp(out + "/dimension_report.csv");
  CHECK(report_csv.find("method,estimate,stderr") != std::string::npos);
  fs::remove_all(out);
  std::remove(csv_path.c_str());
}

#ifdef PHDIM_CLI_PATH
TEST_CASE("cli exit codes: 0 success, 2 config error, 3 resource guard") {
  std::string out = temp_dir("phdim_cli_exit");
  CHECK(run_cli("sample --measure cantor-middle-thirds -n 10 --out " + out) ==
        0);
  CHECK(run_cli("sample --measure no-such-measure -n 10 --out " + out) == 2);
  CHECK(run_cli("experiment convergence --config /nonexistent.toml") == 2);

  std::string bad = write_temp("phdim_cli_bad.toml",
                               "[experiment]\nkind = \"mystery\"\n");
  CHECK(run_cli("experiment convergence --config " + bad) == 2);

  std::string guarded = write_temp(
      "phdim_cli_guard.toml",
      "[experiment]\nkind = \"count-scaling\"\nout = \"" + out +
          "\"\n[measure]\nname = \"uniform-cube\"\nambient_dim = 2\n"
          "[statistic]\ni = 2\nn_ladder = [100, 200, 300, 500]\ntrials = 1\n");
  CHECK(run_cli("experiment count-scaling --config " + guarded) == 3);

  std::string mismatch = write_temp(
      "phdim_cli_mismatch.toml", "[experiment]\nkind = \"occupancy\"\n");
  CHECK(run_cli("experiment convergence --config " + mismatch) == 2);

  std::remove(bad.c_str());
  std::remove(guarded.c_str());
  std::remove(mismatch.c_str());
  fs::remove_all(out);
}
#endif
