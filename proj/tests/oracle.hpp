// Test-only reference implementations: an unoptimized left-to-right
// boundary-matrix reduction over the two-element field (dense bitset
// columns, no clearing) and a rank-based Betti-number computation for
// sublevel complexes. Deliberately independent of the library's reduction.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "phdim/barcode.hpp"
#include "phdim/distance.hpp"
#include "phdim/filtration.hpp"
#include "phdim/rng.hpp"

namespace oracle {

using Bits = std::vector<std::uint64_t>;

inline void set_bit(Bits& b, std::size_t i) { b[i / 64] |= 1ULL << (i % 64); }
inline bool any_bit(const Bits& b) {
  for (std::uint64_t w : b)
    if (w) return true;
  return false;
}
inline long low_bit(const Bits& b) {
  for (std::size_t w = b.size(); w-- > 0;)
    if (b[w]) return static_cast<long>(w * 64 + 63 - __builtin_clzll(b[w]));
  return -1;
}
inline void add_into(Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}

inline std::vector<Bits> boundary_columns(const phdim::Filtration& f) {
  std::map<std::vector<std::uint32_t>, std::size_t> position;
  for (std::size_t j = 0; j < f.simplices.size(); ++j)
    position[f.simplices[j].vertices] = j;
  const std::size_t words = (f.simplices.size() + 63) / 64;
  std::vector<Bits> cols(f.simplices.size(), Bits(words, 0));
  for (std::size_t j = 0; j < f.simplices.size(); ++j) {
    const auto& s = f.simplices[j];
    if (s.dim() == 0) continue;
    std::vector<std::uint32_t> facet(s.vertices.size() - 1);
    for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
      std::size_t t = 0;
      for (std::size_t k = 0; k < s.vertices.size(); ++k)
        if (k != drop) facet[t++] = s.vertices[k];
      set_bit(cols[j], position.at(facet));
    }
  }
  return cols;
}

// Plain reduction: reduce columns left to right, pair (low, j), no clearing.
inline phdim::Barcode barcode(const phdim::Filtration& f) {
  std::vector<Bits> r = boundary_columns(f);
  const std::size_t n = f.simplices.size();
  std::vector<long> owner(n, -1);
  phdim::Barcode out;
  out.flavor = f.flavor;
  const std::size_t degrees = f.max_dim == 0 ? 1 : f.max_dim;
  out.max_degree = degrees - 1;
  out.by_degree.assign(degrees, {});
  std::vector<char> paired(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    long low = low_bit(r[j]);
    while (low >= 0 && owner[low] >= 0) {
      add_into(r[j], r[static_cast<std::size_t>(owner[low])]);
      low = low_bit(r[j]);
    }
    if (low >= 0) {
      owner[low] = static_cast<long>(j);
      paired[low] = 1;
      paired[j] = 1;
      std::size_t deg = f.simplices[j].dim() - 1;
      double birth = f.simplices[static_cast<std::size_t>(low)].value;
      double death = f.simplices[j].value;
      if (deg < degrees && death > birth)
        out.by_degree[deg].push_back({deg, birth, death});
    }
  }
  // Essential classes (unpaired simplices with zero reduced column) are
  // dropped, matching the reduced-homology convention; flag extras.
  std::size_t essential_vertices = 0, essential_higher = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (!paired[j]) {
      if (f.simplices[j].dim() == 0)
        ++essential_vertices;
      else if (f.simplices[j].dim() <= degrees - 1)
        ++essential_higher;
    }
  if (essential_vertices > 1 || essential_higher > 0)
    out.truncated_at = f.max_scale;
  for (auto& deg : out.by_degree)
    std::sort(deg.begin(), deg.end(),
              [](const phdim::PersistenceInterval& a,
                 const phdim::PersistenceInterval& b) {
                if (a.birth != b.birth) return a.birth < b.birth;
                return a.death < b.death;
              });
  return out;
}

// Rank of a set of GF(2) columns by Gaussian elimination.
inline std::size_t rank(std::vector<Bits> cols) {
  std::size_t r = 0;
  std::map<long, std::size_t> pivot;  // low bit -> column index
  for (std::size_t j = 0; j < cols.size(); ++j) {
    long low = low_bit(cols[j]);
    while (low >= 0 && pivot.count(low)) {
      add_into(cols[j], cols[pivot[low]]);
      low = low_bit(cols[j]);
    }
    if (low >= 0) {
      pivot[low] = j;
      ++r;
    }
  }
  return r;
}

// Reduced Betti number of the eps-sublevel complex in the given degree,
// computed from boundary ranks alone.
inline std::size_t betti(const phdim::Filtration& f, std::size_t degree,
                         double eps) {
  std::vector<Bits> all = boundary_columns(f);
  std::size_t simplices_deg = 0;
  std::vector<Bits> d_deg, d_above;
  for (std::size_t j = 0; j < f.simplices.size(); ++j) {
    if (f.simplices[j].value > eps) continue;
    if (f.simplices[j].dim() == degree) {
      ++simplices_deg;
      if (degree > 0) d_deg.push_back(all[j]);
    } else if (f.simplices[j].dim() == degree + 1) {
      d_above.push_back(all[j]);
    }
  }
  std::size_t b =
      simplices_deg - rank(std::move(d_deg)) - rank(std::move(d_above));
  if (degree == 0) --b;  // reduced homology
  return b;
}

inline phdim::DistanceMatrix random_distances(std::size_t n,
                                              std::uint64_t seed) {
  phdim::Rng rng(seed);
  phdim::DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d.set(i, j, rng.uniform(0.1, 1.0));
  return d;
}

inline bool barcodes_equal(const phdim::Barcode& a, const phdim::Barcode& b,
                           std::size_t degrees, double tol = 0.0) {
  for (std::size_t deg = 0; deg < degrees; ++deg) {
    if (a.degree(deg).size() != b.degree(deg).size()) return false;
    for (std::size_t i = 0; i < a.degree(deg).size(); ++i) {
      if (std::abs(a.degree(deg)[i].birth - b.degree(deg)[i].birth) > tol)
        return false;
      if (std::abs(a.degree(deg)[i].death - b.degree(deg)[i].death) > tol)
        return false;
    }
  }
  return true;
}

}  // namespace oracle
