#include "phdim/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace phdim {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line_no) + ": " + what);
}

bool valid_key(const std::string& k) {
  if (k.empty()) return false;
  for (char c : k)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' &&
        c != '.')
      return false;
  return true;
}

double parse_number(const std::string& text, std::size_t line_no) {
  const std::string t = trim(text);
  if (t.empty()) fail(line_no, "expected a number");
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) fail(line_no, "malformed number '" + t + "'");
  return v;
}

TomlValue parse_value(const std::string& text, std::size_t line_no) {
  TomlValue v;
  const std::string t = trim(text);
  if (t.empty()) fail(line_no, "missing value");
  if (t.front() == '"') {
    if (t.size() < 2 || t.back() != '"')
      fail(line_no, "unterminated string");
    v.kind = TomlValue::Kind::string;
    v.str = t.substr(1, t.size() - 2);
    return v;
  }
  if (t == "true" || t == "false") {
    v.kind = TomlValue::Kind::boolean;
    v.flag = t == "true";
    return v;
  }
  if (t.front() == '[') {
    if (t.back() != ']') fail(line_no, "unterminated array");
    v.kind = TomlValue::Kind::array;
    std::string inner = t.substr(1, t.size() - 2);
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (trim(item).empty() && ss.eof()) break;  // trailing comma
      v.array.push_back(parse_number(item, line_no));
    }
    return v;
  }
  v.kind = TomlValue::Kind::number;
  v.num = parse_number(t, line_no);
  return v;
}

}  // namespace

bool TomlTable::has(const std::string& key) const {
  return values_.count(key) > 0;
}

const TomlValue& TomlTable::at(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing config key '" + key + "'");
  return it->second;
}

std::string TomlTable::get_string(const std::string& key) const {
  const TomlValue& v = at(key);
  if (v.kind != TomlValue::Kind::string)
    throw ConfigError("config key '" + key + "' must be a string");
  return v.str;
}

double TomlTable::get_number(const std::string& key) const {
  const TomlValue& v = at(key);
  if (v.kind != TomlValue::Kind::number)
    throw ConfigError("config key '" + key + "' must be a number");
  return v.num;
}

std::int64_t TomlTable::get_integer(const std::string& key) const {
  double v = get_number(key);
  auto i = static_cast<std::int64_t>(v);
  if (static_cast<double>(i) != v)
    throw ConfigError("config key '" + key + "' must be an integer");
  return i;
}

bool TomlTable::get_boolean(const std::string& key) const {
  const TomlValue& v = at(key);
  if (v.kind != TomlValue::Kind::boolean)
    throw ConfigError("config key '" + key + "' must be a boolean");
  return v.flag;
}

std::vector<double> TomlTable::get_array(const std::string& key) const {
  const TomlValue& v = at(key);
  if (v.kind != TomlValue::Kind::array)
    throw ConfigError("config key '" + key + "' must be an array");
  return v.array;
}

std::string TomlTable::get_string(const std::string& key,
                                  const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}
double TomlTable::get_number(const std::string& key, double fallback) const {
  return has(key) ? get_number(key) : fallback;
}
std::int64_t TomlTable::get_integer(const std::string& key,
                                    std::int64_t fallback) const {
  return has(key) ? get_integer(key) : fallback;
}
bool TomlTable::get_boolean(const std::string& key, bool fallback) const {
  return has(key) ? get_boolean(key) : fallback;
}

std::vector<std::string> TomlTable::keys_in(const std::string& section) const {
  std::vector<std::string> out;
  const std::string prefix = section + ".";
  for (const std::string& key : order_)
    if (key.rfind(prefix, 0) == 0) out.push_back(key.substr(prefix.size()));
  return out;
}

void TomlTable::set(const std::string& key, TomlValue value) {
  if (values_.count(key) == 0) order_.push_back(key);
  values_[key] = std::move(value);
}

TomlTable parse_toml_string(const std::string& text) {
  TomlTable table;
  std::stringstream ss(text);
  std::string line, section;
  std::size_t line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    std::string t = trim(strip_comment(line));
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') fail(line_no, "unterminated section header");
      section = trim(t.substr(1, t.size() - 2));
      if (!valid_key(section)) fail(line_no, "invalid section name");
      continue;
    }
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    std::string key = trim(t.substr(0, eq));
    if (!valid_key(key)) fail(line_no, "invalid key '" + key + "'");
    std::string full = section.empty() ? key : section + "." + key;
    table.set(full, parse_value(t.substr(eq + 1), line_no));
  }
  return table;
}

TomlTable parse_toml_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_toml_string(buf.str());
}

std::string config_hash_hex(const std::string& raw_bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : raw_bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx",
                static_cast<unsigned long long>(h));
  return out;
}

ExperimentKind experiment_kind_from_name(const std::string& name) {
  if (name == "convergence") return ExperimentKind::convergence;
  if (name == "oscillation") return ExperimentKind::oscillation;
  if (name == "count-scaling") return ExperimentKind::count_scaling;
  if (name == "occupancy") return ExperimentKind::occupancy;
  if (name == "dimension-report") return ExperimentKind::dimension_report;
  throw ConfigError("unknown experiment kind '" + name + "'");
}

std::string experiment_kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::convergence: return "convergence";
    case ExperimentKind::oscillation: return "oscillation";
    case ExperimentKind::count_scaling: return "count-scaling";
    case ExperimentKind::occupancy: return "occupancy";
    case ExperimentKind::dimension_report: return "dimension-report";
  }
  throw ConfigError("unknown experiment kind");
}

namespace {

IntervalSchedule schedule_from_string(const std::string& ops) {
  IntervalSchedule s;
  for (char c : ops) {
    switch (c) {
      case 'K': s.ops.push_back(op_K()); break;
      case 'L': s.ops.push_back(op_L()); break;
      case 'G': s.ops.push_back(op_Gamma()); break;
      default:
        throw ConfigError(std::string("invalid schedule op '") + c +
                          "' (expected K, L, or G)");
    }
  }
  return s;
}

MeasureSpec measure_from_table(const TomlTable& t) {
  MeasureSpec spec;
  try {
    spec = measure_from_name(t.get_string("measure.name"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (t.has("measure.beta")) spec.beta = t.get_number("measure.beta");
  if (t.has("measure.ambient_dim"))
    spec.ambient_dim =
        static_cast<std::size_t>(t.get_integer("measure.ambient_dim"));
  if (t.has("measure.R")) spec.R = t.get_number("measure.R");
  if (t.has("measure.r")) spec.r = t.get_number("measure.r");
  if (t.has("measure.offset")) spec.offset = t.get_number("measure.offset");
  if (t.has("measure.prob")) spec.prob = t.get_number("measure.prob");
  if (t.has("measure.depth"))
    spec.depth = static_cast<std::size_t>(t.get_integer("measure.depth"));
  if (t.has("measure.schedule"))
    spec.schedule = schedule_from_string(t.get_string("measure.schedule"));
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

}  // namespace

void ExperimentConfig::validate() const {
  const bool has_input = measure.has_value() || !cloud_csv.empty();
  switch (kind) {
    case ExperimentKind::convergence:
      if (!has_input)
        throw ConfigError("convergence requires a measure or a csv input");
      if (!cloud_csv.empty() && !explicit_dim)
        throw ConfigError("csv input requires an explicit dimension d");
      break;
    case ExperimentKind::count_scaling:
      if (!has_input)
        throw ConfigError("count-scaling requires a measure or a csv input");
      if (degree < 1)
        throw ConfigError("count-scaling requires degree i >= 1");
      break;
    case ExperimentKind::dimension_report:
      if (!has_input)
        throw ConfigError("dimension-report requires a measure or a csv input");
      break;
    case ExperimentKind::oscillation:
      if (schedule_depth < 9)
        throw ConfigError("oscillation schedule depth must be >= 9");
      break;
    case ExperimentKind::occupancy:
      try {
        occupancy.validate();
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      break;
  }
  if (!(alpha > 0)) throw ConfigError("alpha must be > 0");
  for (std::size_t k = 1; k < n_ladder.size(); ++k)
    if (n_ladder[k] <= n_ladder[k - 1])
      throw ConfigError("n_ladder must be strictly increasing");
}

ExperimentConfig experiment_config_from_toml(const TomlTable& t,
                                             const std::string& raw_text) {
  ExperimentConfig cfg;
  cfg.raw_text = raw_text;
  cfg.config_hash = config_hash_hex(raw_text);
  cfg.kind = experiment_kind_from_name(t.get_string("experiment.kind"));
  cfg.seed = static_cast<std::uint64_t>(t.get_integer("experiment.seed", 0));
  cfg.out_dir = t.get_string("experiment.out", ".");
  cfg.threads =
      static_cast<std::size_t>(t.get_integer("experiment.threads", 1));
  cfg.override_guards = t.get_boolean("experiment.override_guards", false);

  if (t.has("measure.name")) cfg.measure = measure_from_table(t);
  if (t.has("input.csv")) cfg.cloud_csv = t.get_string("input.csv");
  if (t.has("input.dim")) cfg.explicit_dim = t.get_number("input.dim");
  if (cfg.measure && !cfg.cloud_csv.empty())
    throw ConfigError("specify either a measure or a csv input, not both");

  cfg.degree = static_cast<std::size_t>(t.get_integer("statistic.i", 0));
  cfg.alpha = t.get_number("statistic.alpha", 1.0);
  if (t.has("statistic.n_ladder")) {
    for (double v : t.get_array("statistic.n_ladder")) {
      if (v < 1 || v != std::floor(v))
        throw ConfigError("n_ladder entries must be positive integers");
      cfg.n_ladder.push_back(static_cast<std::size_t>(v));
    }
  }
  cfg.trials = static_cast<std::size_t>(t.get_integer("statistic.trials", 0));

  cfg.schedule_depth =
      static_cast<std::size_t>(t.get_integer("oscillation.depth", 24));
  cfg.all_k_control = t.get_boolean("oscillation.all_k", false);

  cfg.occupancy.a = t.get_number("occupancy.a", cfg.occupancy.a);
  cfg.occupancy.p = t.get_number("occupancy.p", cfg.occupancy.p);
  cfg.occupancy.q = t.get_number("occupancy.q", cfg.occupancy.q);
  cfg.occupancy.r =
      static_cast<std::size_t>(t.get_integer("occupancy.r",
                                             static_cast<std::int64_t>(cfg.occupancy.r)));
  cfg.occupancy.n =
      static_cast<std::size_t>(t.get_integer("occupancy.n",
                                             static_cast<std::int64_t>(cfg.occupancy.n)));
  cfg.occupancy.trials = static_cast<std::size_t>(
      t.get_integer("occupancy.trials",
                    static_cast<std::int64_t>(cfg.occupancy.trials)));

  cfg.validate();
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string raw = buf.str();
  return experiment_config_from_toml(parse_toml_string(raw), raw);
}

}  // namespace phdim
