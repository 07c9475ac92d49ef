#include "phdim/reduction.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace phdim {

namespace {

using Column = std::vector<std::uint32_t>;  // row indices, sorted ascending

// Symmetric difference of two sorted columns (addition over GF(2)).
Column add_columns(const Column& a, const Column& b) {
  Column out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      out.push_back(a[i++]);
    else if (b[j] < a[i])
      out.push_back(b[j++]);
    else {
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

bool filtration_order_ok(const FilteredSimplex& a, const FilteredSimplex& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.vertices.size() != b.vertices.size())
    return a.vertices.size() < b.vertices.size();
  return a.vertices < b.vertices;
}

}  // namespace

Barcode compute_persistence(const Filtration& f) {
  const std::size_t n = f.simplices.size();
  std::map<std::vector<std::uint32_t>, std::uint32_t> position;
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0 && !filtration_order_ok(f.simplices[j - 1], f.simplices[j]))
      throw std::invalid_argument("filtration is not sorted");
    position[f.simplices[j].vertices] = static_cast<std::uint32_t>(j);
  }

  // Boundary columns; also checks face-closedness and monotone values.
  std::vector<Column> boundary(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& s = f.simplices[j];
    if (s.dim() == 0) continue;
    Column col;
    std::vector<std::uint32_t> facet(s.vertices.size() - 1);
    for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
      std::size_t t = 0;
      for (std::size_t k = 0; k < s.vertices.size(); ++k)
        if (k != drop) facet[t++] = s.vertices[k];
      auto it = position.find(facet);
      if (it == position.end())
        throw std::invalid_argument("filtration is not face-closed");
      if (f.simplices[it->second].value > s.value)
        throw std::invalid_argument("filtration values are not monotone");
      col.push_back(it->second);
    }
    std::sort(col.begin(), col.end());
    boundary[j] = std::move(col);
  }

  const std::size_t report_degrees = f.max_dim == 0 ? 1 : f.max_dim;
  Barcode barcode;
  barcode.flavor = f.flavor;
  barcode.max_degree = report_degrees - 1;
  barcode.by_degree.assign(report_degrees, {});

  std::vector<char> cleared(n, 0);
  std::vector<std::int64_t> pivot_owner(n, -1);
  std::size_t extra_essential = 0;

  for (std::size_t dim = f.max_dim; dim >= 1; --dim) {
    for (std::size_t j = 0; j < n; ++j) {
      if (f.simplices[j].dim() != dim || cleared[j]) continue;
      Column col = std::move(boundary[j]);
      while (!col.empty()) {
        std::uint32_t low = col.back();
        std::int64_t owner = pivot_owner[low];
        if (owner < 0) break;
        col = add_columns(col, boundary[owner]);
      }
      if (!col.empty()) {
        std::uint32_t low = col.back();
        pivot_owner[low] = static_cast<std::int64_t>(j);
        cleared[low] = 1;
        const double birth = f.simplices[low].value;
        const double death = f.simplices[j].value;
        if (death > birth)
          barcode.by_degree[dim - 1].push_back({dim - 1, birth, death});
        boundary[j] = std::move(col);
      } else if (dim <= report_degrees - 1) {
        ++extra_essential;  // essential class in a reported positive degree
      }
    }
  }

  // Unpaired vertices are essential components; reduced homology drops the
  // one that is always present.
  std::size_t essential_vertices = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (f.simplices[j].dim() == 0 && !cleared[j]) ++essential_vertices;
  if (essential_vertices > 1)
    extra_essential += essential_vertices - 1;

  if (extra_essential > 0) barcode.truncated_at = f.max_scale;

  for (auto& deg : barcode.by_degree)
    std::sort(deg.begin(), deg.end(),
              [](const PersistenceInterval& a, const PersistenceInterval& b) {
                if (a.birth != b.birth) return a.birth < b.birth;
                return a.death < b.death;
              });
  return barcode;
}

}  // namespace phdim
