#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phdim/filtration.hpp"

namespace phdim {

struct PersistenceInterval {
  std::size_t degree = 0;
  double birth = 0;
  double death = 0;  // finite; b < d

  double length() const { return death - birth; }
};

/// Reduced persistent homology intervals grouped by degree. Essential classes
/// (including extra components of a truncated filtration) are excluded from
/// all sums and counts; truncated_at records the cutoff when one applied.
struct Barcode {
  std::vector<std::vector<PersistenceInterval>> by_degree;
  ComplexFlavor flavor = ComplexFlavor::rips;
  std::size_t max_degree = 0;  // highest degree with complete intervals
  std::optional<double> truncated_at;

  const std::vector<PersistenceInterval>& degree(std::size_t i) const;
};

// Sum over degree-i intervals with |I| > eps of |I|^alpha. eps = 0 gives the
// full alpha-weight. Throws if alpha <= 0 or eps < 0.
double barcode_alpha_weight(const Barcode& b, std::size_t i, double alpha,
                            double eps = 0);

// #{I in degree i : |I| > eps}, strict.
std::size_t interval_count_exceeding(const Barcode& b, std::size_t i,
                                     double eps);

// Barcode CSV: comment header `# truncated_at=<scale or none>`, then
// degree,birth,death rows.
void write_barcode_csv(const Barcode& b, const std::string& path,
                       const std::string& comment_header = "");

}  // namespace phdim
