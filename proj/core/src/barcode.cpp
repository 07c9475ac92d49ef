#include "phdim/barcode.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace phdim {

const std::vector<PersistenceInterval>& Barcode::degree(std::size_t i) const {
  static const std::vector<PersistenceInterval> empty;
  return i < by_degree.size() ? by_degree[i] : empty;
}

double barcode_alpha_weight(const Barcode& b, std::size_t i, double alpha,
                            double eps) {
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be > 0");
  if (eps < 0) throw std::invalid_argument("eps must be >= 0");
  double s = 0;
  for (const auto& iv : b.degree(i))
    if (iv.length() > eps) s += std::pow(iv.length(), alpha);
  return s;
}

std::size_t interval_count_exceeding(const Barcode& b, std::size_t i,
                                     double eps) {
  if (eps < 0) throw std::invalid_argument("eps must be >= 0");
  std::size_t c = 0;
  for (const auto& iv : b.degree(i))
    if (iv.length() > eps) ++c;
  return c;
}

void write_barcode_csv(const Barcode& b, const std::string& path,
                       const std::string& comment_header) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (!comment_header.empty()) out << comment_header;
  out << "# truncated_at=";
  if (b.truncated_at)
    out << *b.truncated_at;
  else
    out << "none";
  out << "\n";
  out << "degree,birth,death\n";
  out.precision(17);
  for (std::size_t i = 0; i < b.by_degree.size(); ++i)
    for (const auto& iv : b.by_degree[i])
      out << i << "," << iv.birth << "," << iv.death << "\n";
}

}  // namespace phdim
