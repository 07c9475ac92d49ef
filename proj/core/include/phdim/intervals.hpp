#pragma once

#include <cstddef>
#include <vector>

namespace phdim {

struct Interval {
  double lo = 0;
  double hi = 1;
  double length() const { return hi - lo; }
};

/// Sorted, pairwise-disjoint closed intervals of equal length inside [0,1].
struct IntervalCollection {
  std::vector<Interval> intervals;

  std::size_t count() const { return intervals.size(); }
  double min_length() const;
  // Throws std::invalid_argument if sortedness, disjointness, containment in
  // [0,1], or equal lengths (rel. tol 1e-12) fail.
  void validate() const;
  bool contains(double x) const;
};

// Level operations replacing each interval by two children anchored at the
// parent's endpoints:
//   K       child ratio 1/3            (middle thirds)
//   K_beta  child ratio (1-beta)/2     (middle-beta)
//   L       child ratio (5/7)(1/3)     (thinner than K)
//   Gamma   child ratio (7/5)(1/3)     (thicker than K)
enum class IntervalOpKind { K, KBeta, L, Gamma };

struct IntervalOp {
  IntervalOpKind kind = IntervalOpKind::K;
  double beta = 0;  // only for KBeta, must lie in (0,1)

  double child_ratio() const;
};

IntervalOp op_K();
IntervalOp op_K_beta(double beta);
IntervalOp op_L();
IntervalOp op_Gamma();

// Replaces each interval by its two children; output sorted. Throws
// "schedule invalid at level" if children of one parent would overlap.
IntervalCollection apply_interval_op(const IntervalCollection& c,
                                     const IntervalOp& op);

/// Ordered list of level operations defining a nested construction from [0,1].
struct IntervalSchedule {
  std::vector<IntervalOp> ops;

  std::size_t depth() const { return ops.size(); }
};

// Level k (1-based) is the result of applying the first k operations to
// {[0,1]}; level 0 is {[0,1]} itself. Validates every level.
std::vector<IntervalCollection> build_schedule_levels(
    const IntervalSchedule& s);

// All-K schedule: the middle-thirds Cantor construction.
IntervalSchedule cantor_schedule(std::size_t depth);

// Canonical two-regime schedule: K everywhere except levels 4, 8, 12, ...,
// which apply L and Gamma alternately (L first). Between an L and the next
// Gamma the collections have lengths (5/7)(1/3)^b; elsewhere (1/3)^b.
IntervalSchedule canonical_oscillation_schedule(std::size_t depth);

}  // namespace phdim
