#include "phdim/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace phdim {

double IntervalCollection::min_length() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& iv : intervals) m = std::min(m, iv.length());
  return m;
}

void IntervalCollection::validate() const {
  if (intervals.empty())
    throw std::invalid_argument("interval collection is empty");
  const double len0 = intervals.front().length();
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto& iv = intervals[i];
    if (!(iv.lo < iv.hi))
      throw std::invalid_argument("degenerate interval");
    if (iv.lo < -1e-15 || iv.hi > 1 + 1e-15)
      throw std::invalid_argument("interval not contained in [0,1]");
    // Endpoints are anchored inside [0,1], so each computed length carries a
    // few ulps of absolute error regardless of how small it is.
    if (std::abs(iv.length() - len0) > 1e-12 * len0 + 1e-14)
      throw std::invalid_argument("intervals not of equal length");
    if (i > 0 && !(intervals[i - 1].hi < iv.lo))
      throw std::invalid_argument("intervals not sorted and disjoint");
  }
}

bool IntervalCollection::contains(double x) const {
  auto it = std::upper_bound(
      intervals.begin(), intervals.end(), x,
      [](double v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals.begin()) return false;
  --it;
  return x >= it->lo && x <= it->hi;
}

double IntervalOp::child_ratio() const {
  switch (kind) {
    case IntervalOpKind::K:
      return 1.0 / 3.0;
    case IntervalOpKind::KBeta:
      return (1.0 - beta) / 2.0;
    case IntervalOpKind::L:
      return (5.0 / 7.0) * (1.0 / 3.0);
    case IntervalOpKind::Gamma:
      return (7.0 / 5.0) * (1.0 / 3.0);
  }
  return 0;
}

IntervalOp op_K() { return {IntervalOpKind::K, 0}; }

IntervalOp op_K_beta(double beta) {
  if (!(beta > 0 && beta < 1))
    throw std::invalid_argument("beta must lie in (0,1)");
  return {IntervalOpKind::KBeta, beta};
}

IntervalOp op_L() { return {IntervalOpKind::L, 0}; }
IntervalOp op_Gamma() { return {IntervalOpKind::Gamma, 0}; }

IntervalCollection apply_interval_op(const IntervalCollection& c,
                                     const IntervalOp& op) {
  const double ratio = op.child_ratio();
  // Children share the parent's endpoints, so they overlap iff ratio >= 1/2.
  if (!(ratio < 0.5))
    throw std::invalid_argument("schedule invalid at level: children overlap");
  IntervalCollection out;
  out.intervals.reserve(2 * c.intervals.size());
  for (const auto& iv : c.intervals) {
    const double child = ratio * iv.length();
    out.intervals.push_back({iv.lo, iv.lo + child});
    out.intervals.push_back({iv.hi - child, iv.hi});
  }
  return out;
}

std::vector<IntervalCollection> build_schedule_levels(
    const IntervalSchedule& s) {
  std::vector<IntervalCollection> levels;
  IntervalCollection current;
  current.intervals = {{0.0, 1.0}};
  levels.push_back(current);
  for (std::size_t k = 0; k < s.ops.size(); ++k) {
    try {
      current = apply_interval_op(current, s.ops[k]);
      current.validate();
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("schedule invalid at level " +
                                  std::to_string(k + 1) + ": " + e.what());
    }
    levels.push_back(current);
  }
  return levels;
}

IntervalSchedule cantor_schedule(std::size_t depth) {
  IntervalSchedule s;
  s.ops.assign(depth, op_K());
  return s;
}

IntervalSchedule canonical_oscillation_schedule(std::size_t depth) {
  IntervalSchedule s;
  bool next_is_L = true;
  for (std::size_t k = 1; k <= depth; ++k) {
    if (k % 4 == 0) {
      s.ops.push_back(next_is_L ? op_L() : op_Gamma());
      next_is_L = !next_is_L;
    } else {
      s.ops.push_back(op_K());
    }
  }
  return s;
}

}  // namespace phdim
