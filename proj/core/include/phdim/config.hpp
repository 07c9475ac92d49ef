#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "phdim/measure.hpp"
#include "phdim/occupancy.hpp"

namespace phdim {

// Invalid or missing configuration; the CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A TOML value restricted to what the config surface needs: strings,
// numbers, booleans, and flat arrays of numbers.
struct TomlValue {
  enum class Kind { string, number, boolean, array };
  Kind kind = Kind::string;
  std::string str;
  double num = 0;
  bool flag = false;
  std::vector<double> array;
};

// Flat table keyed by "section.key" (top-level keys have no dot). Supports
// comments, [section] headers, quoted strings, integers, floats, booleans,
// and numeric arrays — the subset this project's configs use.
class TomlTable {
 public:
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key) const;
  double get_number(const std::string& key) const;
  std::int64_t get_integer(const std::string& key) const;
  bool get_boolean(const std::string& key) const;
  std::vector<double> get_array(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_number(const std::string& key, double fallback) const;
  std::int64_t get_integer(const std::string& key, std::int64_t fallback) const;
  bool get_boolean(const std::string& key, bool fallback) const;

  // Keys under "section." in file order, without the prefix.
  std::vector<std::string> keys_in(const std::string& section) const;

  void set(const std::string& key, TomlValue value);

 private:
  const TomlValue& at(const std::string& key) const;
  std::map<std::string, TomlValue> values_;
  std::vector<std::string> order_;
};

// Both throw ConfigError naming the offending line.
TomlTable parse_toml_string(const std::string& text);
TomlTable parse_toml_file(const std::string& path);

// FNV-1a over the raw config bytes, printed as 16 hex digits; embedded in
// every output artifact so results are traceable to their exact config.
std::string config_hash_hex(const std::string& raw_bytes);

enum class ExperimentKind {
  convergence,
  oscillation,
  count_scaling,
  occupancy,
  dimension_report,
};

ExperimentKind experiment_kind_from_name(const std::string& name);
std::string experiment_kind_name(ExperimentKind kind);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::convergence;

  // Input: either a named measure or an ingested point-cloud CSV.
  std::optional<MeasureSpec> measure;
  std::string cloud_csv;
  std::optional<double> explicit_dim;  // required with CSV input

  std::size_t degree = 0;
  double alpha = 1.0;
  std::vector<std::size_t> n_ladder;  // empty = module defaults
  std::size_t trials = 0;             // 0 = module default

  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::size_t threads = 1;

  // oscillation
  std::size_t schedule_depth = 24;
  bool all_k_control = false;

  // count-scaling resource guards (Rips cost): degree 1 capped at n=2500,
  // degree 2 at n=400 unless overridden.
  bool override_guards = false;

  OccupancyConfig occupancy;

  std::string config_hash;  // of the file this was loaded from
  std::string raw_text;

  void validate() const;  // throws ConfigError
};

ExperimentConfig load_experiment_config(const std::string& path);
ExperimentConfig experiment_config_from_toml(const TomlTable& t,
                                             const std::string& raw_text);

}  // namespace phdim
