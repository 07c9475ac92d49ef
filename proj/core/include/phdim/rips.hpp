#pragma once

#include <limits>

#include "phdim/barcode.hpp"
#include "phdim/distance.hpp"

namespace phdim {

// Rips persistence up to homology degree max_degree, equal to
// compute_persistence(build_rips_filtration(...)) but with implicitly
// represented simplices, persistent cohomology reduction, and clearing, so
// the n-ladder experiments stay tractable.
//
// threshold defaults to the enclosing radius, past which the complex is a
// cone; the barcode is then identical to the untruncated one. Lower
// thresholds drop later intervals and set the truncation flag.
Barcode rips_persistence(
    const DistanceMatrix& d, std::size_t max_degree,
    double threshold = std::numeric_limits<double>::infinity());

}  // namespace phdim
