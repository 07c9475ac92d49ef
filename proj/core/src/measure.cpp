#include "phdim/measure.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "phdim/rng.hpp"

namespace phdim {

namespace {

constexpr double kLog2 = 0.6931471805599453;
constexpr double kLog3 = 1.0986122886681098;

double cantor_coordinate(Rng& rng, std::size_t depth) {
  double lo = 0, len = 1;
  for (std::size_t k = 0; k < depth; ++k) {
    len /= 3;
    if (rng.next() & 1) lo += 2 * len;
  }
  return lo + rng.uniform01() * len;
}

double middle_beta_coordinate(Rng& rng, double beta, std::size_t depth) {
  const double gamma = (1 - beta) / 2;
  double lo = 0, len = 1;
  for (std::size_t k = 0; k < depth; ++k) {
    if (rng.next() & 1) lo += (1 - gamma) * len;
    len *= gamma;
  }
  return lo + rng.uniform01() * len;
}

void sample_torus(Rng& rng, double R, double r, double* out) {
  constexpr double two_pi = 2 * std::numbers::pi;
  // Rejection sampling of the surface measure: uniform (theta, phi) accepted
  // with probability proportional to R + r*cos(phi).
  for (;;) {
    double theta = two_pi * rng.uniform01();
    double phi = two_pi * rng.uniform01();
    double u = rng.uniform01();
    if (u * (R + r) <= R + r * std::cos(phi)) {
      double w = R + r * std::cos(phi);
      out[0] = w * std::cos(theta);
      out[1] = w * std::sin(theta);
      out[2] = r * std::sin(phi);
      return;
    }
  }
}

// The 20 subcubes of the Menger sponge: 3x3x3 grid cells with at most one
// coordinate index equal to 1.
const std::array<std::array<int, 3>, 20>& menger_cells() {
  static const auto cells = [] {
    std::array<std::array<int, 3>, 20> out{};
    std::size_t idx = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          if ((a == 1) + (b == 1) + (c == 1) <= 1) out[idx++] = {a, b, c};
    return out;
  }();
  return cells;
}

}  // namespace

double MeasureSpec::nominal_dimension() const {
  switch (kind) {
    case MeasureKind::cantor_middle_thirds:
      return kLog2 / kLog3;
    case MeasureKind::cantor_middle_beta:
      return kLog2 / (kLog2 - std::log(1 - beta));
    case MeasureKind::nested_schedule:
      // Branching 2 with dominant child ratio 1/3: the L/Gamma levels change
      // lengths by a bounded factor only, so the dimension is log2/log3.
      return kLog2 / kLog3;
    case MeasureKind::sierpinski_triangle:
      return std::log(3.0) / kLog2;
    case MeasureKind::menger_sponge:
      return std::log(20.0) / kLog3;
    case MeasureKind::cantor_cross_interval:
      return 1 + kLog2 / kLog3;
    case MeasureKind::cantor_dust:
      return static_cast<double>(ambient_dim) * kLog2 / kLog3;
    case MeasureKind::uniform_cube:
      return static_cast<double>(ambient_dim);
    case MeasureKind::torus:
    case MeasureKind::stacked_tori:
      return 2;
  }
  throw std::logic_error("unknown measure kind");
}

std::size_t MeasureSpec::sample_dim() const {
  switch (kind) {
    case MeasureKind::cantor_middle_thirds:
    case MeasureKind::cantor_middle_beta:
    case MeasureKind::nested_schedule:
      return 1;
    case MeasureKind::sierpinski_triangle:
    case MeasureKind::cantor_cross_interval:
      return 2;
    case MeasureKind::menger_sponge:
    case MeasureKind::torus:
    case MeasureKind::stacked_tori:
      return 3;
    case MeasureKind::cantor_dust:
    case MeasureKind::uniform_cube:
      return ambient_dim;
  }
  throw std::logic_error("unknown measure kind");
}

void MeasureSpec::validate() const {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  switch (kind) {
    case MeasureKind::cantor_middle_beta:
      if (!(beta > 0 && beta < 1))
        throw std::invalid_argument("beta must lie in (0,1)");
      break;
    case MeasureKind::cantor_dust:
    case MeasureKind::uniform_cube:
      if (ambient_dim < 1)
        throw std::invalid_argument("ambient dimension must be >= 1");
      break;
    case MeasureKind::torus:
    case MeasureKind::stacked_tori:
      if (!(R > r && r > 0))
        throw std::invalid_argument("torus requires R > r > 0");
      if (kind == MeasureKind::stacked_tori && !(prob >= 0 && prob <= 1))
        throw std::invalid_argument("probability must lie in [0,1]");
      break;
    case MeasureKind::nested_schedule:
      // Children sit at their parent's endpoints, so sibling overlap
      // (ratio >= 1/2) is the only structural failure; materializing the
      // levels would cost 2^depth intervals.
      for (std::size_t k = 0; k < schedule.ops.size(); ++k)
        if (!(schedule.ops[k].child_ratio() < 0.5))
          throw std::invalid_argument("schedule invalid at level " +
                                      std::to_string(k + 1) +
                                      ": children overlap");
      break;
    default:
      break;
  }
}

MeasureSpec measure_from_name(const std::string& name) {
  MeasureSpec spec;
  if (name == "cantor-middle-thirds")
    spec.kind = MeasureKind::cantor_middle_thirds;
  else if (name == "cantor-middle-beta")
    spec.kind = MeasureKind::cantor_middle_beta;
  else if (name == "nested-schedule")
    spec.kind = MeasureKind::nested_schedule;
  else if (name == "sierpinski-triangle")
    spec.kind = MeasureKind::sierpinski_triangle;
  else if (name == "menger-sponge")
    spec.kind = MeasureKind::menger_sponge;
  else if (name == "cantor-cross-interval")
    spec.kind = MeasureKind::cantor_cross_interval;
  else if (name == "cantor-dust")
    spec.kind = MeasureKind::cantor_dust;
  else if (name == "uniform-cube")
    spec.kind = MeasureKind::uniform_cube;
  else if (name == "torus")
    spec.kind = MeasureKind::torus;
  else if (name == "stacked-tori")
    spec.kind = MeasureKind::stacked_tori;
  else
    throw std::invalid_argument("unknown measure: " + name);
  return spec;
}

std::string measure_name(const MeasureSpec& spec) {
  switch (spec.kind) {
    case MeasureKind::cantor_middle_thirds: return "cantor-middle-thirds";
    case MeasureKind::cantor_middle_beta: return "cantor-middle-beta";
    case MeasureKind::nested_schedule: return "nested-schedule";
    case MeasureKind::sierpinski_triangle: return "sierpinski-triangle";
    case MeasureKind::menger_sponge: return "menger-sponge";
    case MeasureKind::cantor_cross_interval: return "cantor-cross-interval";
    case MeasureKind::cantor_dust: return "cantor-dust";
    case MeasureKind::uniform_cube: return "uniform-cube";
    case MeasureKind::torus: return "torus";
    case MeasureKind::stacked_tori: return "stacked-tori";
  }
  throw std::logic_error("unknown measure kind");
}

PointCloud sample_nested(const IntervalSchedule& s, std::size_t n,
                         std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  // Validate cheaply: children are anchored at their parent's endpoints, so
  // the only structural failure is sibling overlap (ratio >= 1/2).
  // Materializing every level would cost 2^depth intervals.
  for (std::size_t k = 0; k < s.ops.size(); ++k)
    if (!(s.ops[k].child_ratio() < 0.5))
      throw std::invalid_argument("schedule invalid at level " +
                                  std::to_string(k + 1) +
                                  ": children overlap");
  Rng rng(seed);
  std::vector<double> coords;
  coords.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double lo = 0, len = 1;
    for (const auto& op : s.ops) {
      const double child = op.child_ratio() * len;
      if (rng.next() & 1) lo += len - child;
      len = child;
    }
    coords.push_back(lo + rng.uniform01() * len);
  }
  return PointCloud(1, std::move(coords));
}

PointCloud sample_measure(const MeasureSpec& spec, std::size_t n,
                          std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  spec.validate();
  if (spec.kind == MeasureKind::nested_schedule)
    return sample_nested(spec.schedule, n, seed);

  Rng rng(seed);
  const std::size_t m = spec.sample_dim();
  std::vector<double> coords;
  coords.reserve(n * m);
  std::array<double, 3> p{};

  for (std::size_t i = 0; i < n; ++i) {
    switch (spec.kind) {
      case MeasureKind::cantor_middle_thirds:
        coords.push_back(cantor_coordinate(rng, spec.depth));
        break;
      case MeasureKind::cantor_middle_beta:
        coords.push_back(middle_beta_coordinate(rng, spec.beta, spec.depth));
        break;
      case MeasureKind::sierpinski_triangle: {
        // IFS with maps x -> (x + v_a)/2 toward the triangle vertices,
        // composed along a uniformly random address.
        static const double vx[3] = {0.0, 1.0, 0.5};
        static const double vy[3] = {0.0, 0.0, 0.8660254037844386};
        double x = 0, y = 0, w = 1;
        for (std::size_t k = 0; k < spec.depth; ++k) {
          std::uint64_t a = rng.uniform_index(3);
          w /= 2;
          x += w * vx[a];
          y += w * vy[a];
        }
        coords.push_back(x);
        coords.push_back(y);
        break;
      }
      case MeasureKind::menger_sponge: {
        const auto& cells = menger_cells();
        double x = 0, y = 0, z = 0, w = 1;
        for (std::size_t k = 0; k < spec.depth; ++k) {
          const auto& c = cells[rng.uniform_index(20)];
          w /= 3;
          x += w * c[0];
          y += w * c[1];
          z += w * c[2];
        }
        coords.push_back(x);
        coords.push_back(y);
        coords.push_back(z);
        break;
      }
      case MeasureKind::cantor_cross_interval:
        coords.push_back(cantor_coordinate(rng, spec.depth));
        coords.push_back(rng.uniform01());
        break;
      case MeasureKind::cantor_dust:
        for (std::size_t k = 0; k < m; ++k)
          coords.push_back(cantor_coordinate(rng, spec.depth));
        break;
      case MeasureKind::uniform_cube:
        for (std::size_t k = 0; k < m; ++k) coords.push_back(rng.uniform01());
        break;
      case MeasureKind::torus:
        sample_torus(rng, spec.R, spec.r, p.data());
        coords.insert(coords.end(), p.begin(), p.end());
        break;
      case MeasureKind::stacked_tori:
        sample_torus(rng, spec.R, spec.r, p.data());
        if (rng.uniform01() < spec.prob) p[2] += spec.offset;
        coords.insert(coords.end(), p.begin(), p.end());
        break;
      default:
        throw std::logic_error("unhandled measure kind");
    }
  }
  return PointCloud(m, std::move(coords));
}

}  // namespace phdim
