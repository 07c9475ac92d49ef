#pragma once

#include <cstdint>
#include <string>

#include "phdim/intervals.hpp"
#include "phdim/point_cloud.hpp"

namespace phdim {

enum class MeasureKind {
  cantor_middle_thirds,
  cantor_middle_beta,
  nested_schedule,
  sierpinski_triangle,
  menger_sponge,
  cantor_cross_interval,
  cantor_dust,
  uniform_cube,
  torus,
  stacked_tori,
};

/// A named measure with its analytically known dimension.
struct MeasureSpec {
  MeasureKind kind = MeasureKind::cantor_middle_thirds;

  double beta = 1.0 / 3.0;      // cantor_middle_beta
  IntervalSchedule schedule;    // nested_schedule
  std::size_t ambient_dim = 2;  // cantor_dust / uniform_cube
  double R = 2, r = 1;          // torus / stacked_tori
  double offset = 3;            // stacked_tori z-translation
  double prob = 0.5;            // stacked_tori translation probability
  std::size_t depth = 40;       // address depth for the self-similar samplers

  // Closed-form dimension of the variant (e.g. log2/log3 for the middle
  // thirds Cantor measure).
  double nominal_dimension() const;
  std::size_t sample_dim() const;
  void validate() const;
};

MeasureSpec measure_from_name(const std::string& name);
std::string measure_name(const MeasureSpec& spec);

// n i.i.d. samples; identical (spec, n, seed) yield bit-identical clouds.
PointCloud sample_measure(const MeasureSpec& spec, std::size_t n,
                          std::uint64_t seed);

// Natural measure of a nested construction: descend from [0,1] choosing a
// uniformly random child per level, then uniform inside the final interval.
PointCloud sample_nested(const IntervalSchedule& s, std::size_t n,
                         std::uint64_t seed);

}  // namespace phdim
