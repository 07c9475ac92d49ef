#pragma once

#include "phdim/barcode.hpp"
#include "phdim/filtration.hpp"

namespace phdim {

// Standard boundary-matrix column reduction over the two-element field with
// clearing, processing dimensions top-down. Reports reduced persistent
// homology in degrees 0 .. max_dim-1. Throws on an unsorted or
// face-violating filtration.
Barcode compute_persistence(const Filtration& f);

}  // namespace phdim
