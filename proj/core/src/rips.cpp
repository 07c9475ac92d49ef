#include "phdim/rips.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "phdim/union_find.hpp"

namespace phdim {

namespace {

using index_t = std::int64_t;

struct IndexDiam {
  index_t index = -1;
  double diameter = 0;
};

// Reverse filtration order: greater diameter first, ties by smaller index.
// Used both to process cohomology columns and as the heap "less" relation,
// making the heap top the cofacet with smallest diameter / largest index.
inline bool reverse_filtration_less(const IndexDiam& a, const IndexDiam& b) {
  return a.diameter > b.diameter ||
         (a.diameter == b.diameter && a.index < b.index);
}

struct ReverseFiltrationCmp {
  bool operator()(const IndexDiam& a, const IndexDiam& b) const {
    return reverse_filtration_less(a, b);
  }
};

using WorkingColumn =
    std::priority_queue<IndexDiam, std::vector<IndexDiam>,
                        ReverseFiltrationCmp>;

class BinomialTable {
 public:
  BinomialTable(index_t n, index_t k) : k_max_(k), table_((n + 1) * (k + 1)) {
    for (index_t i = 0; i <= n; ++i) {
      at(i, 0) = 1;
      for (index_t j = 1; j <= std::min(i, k); ++j)
        at(i, j) = at(i - 1, j - 1) + at(i - 1, j);
    }
  }

  index_t operator()(index_t n, index_t k) const {
    if (k < 0 || k > n) return 0;
    return table_[n * (k_max_ + 1) + k];
  }

 private:
  index_t& at(index_t n, index_t k) { return table_[n * (k_max_ + 1) + k]; }
  index_t k_max_;
  std::vector<index_t> table_;
};

// Simplices are addressed in the combinatorial number system:
// index = sum_k binom(v_k, k+1) over sorted vertices v_0 < ... < v_dim.
class RipsComplex {
 public:
  RipsComplex(const DistanceMatrix& d, index_t max_vertex_dim)
      : dist_(d),
        n_(static_cast<index_t>(d.size())),
        binom_(n_, max_vertex_dim + 2) {}

  index_t n() const { return n_; }
  const BinomialTable& binom() const { return binom_; }
  double dist(index_t i, index_t j) const { return dist_(i, j); }

  // max{ v | binom(v, k) <= idx }, searched below the given bound.
  index_t max_vertex(index_t idx, index_t k, index_t bound) const {
    index_t top = bound, bot = k - 1;
    if (binom_(top, k) <= idx) return top;
    while (top - bot > 1) {
      index_t mid = (top + bot) / 2;
      (binom_(mid, k) <= idx ? bot : top) = mid;
    }
    return bot;
  }

  void vertices_of(index_t idx, index_t dim,
                   std::vector<index_t>& out) const {
    out.resize(dim + 1);
    index_t v = n_ - 1;
    for (index_t k = dim + 1; k > 0; --k) {
      v = max_vertex(idx, k, v);
      out[k - 1] = v;
      idx -= binom_(v, k);
    }
  }

  double diameter(index_t idx, index_t dim) const {
    thread_local std::vector<index_t> vs;
    vertices_of(idx, dim, vs);
    double diam = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        diam = std::max(diam, dist_(vs[i], vs[j]));
    return diam;
  }

 private:
  const DistanceMatrix& dist_;
  index_t n_;
  BinomialTable binom_;
};

// Enumerates cofacets of a dim-simplex in decreasing order of the new
// vertex. With all_cofacets = false, only cofacets whose new vertex is above
// every simplex vertex are produced (each (dim+1)-simplex exactly once).
class CoboundaryEnumerator {
 public:
  CoboundaryEnumerator(const RipsComplex& complex) : complex_(complex) {}

  void set_simplex(const IndexDiam& simplex, index_t dim) {
    idx_below_ = simplex.index;
    idx_above_ = 0;
    j_ = complex_.n() - 1;
    k_ = dim + 1;
    simplex_ = simplex;
    complex_.vertices_of(simplex.index, dim, vertices_);
  }

  bool has_next(bool all_cofacets = true) const {
    return j_ >= k_ &&
           (all_cofacets || complex_.binom()(j_, k_) > idx_below_);
  }

  IndexDiam next() {
    while (complex_.binom()(j_, k_) <= idx_below_) {
      idx_below_ -= complex_.binom()(j_, k_);
      idx_above_ += complex_.binom()(j_, k_ + 1);
      --j_;
      --k_;
    }
    double diam = simplex_.diameter;
    for (index_t v : vertices_) diam = std::max(diam, complex_.dist(j_, v));
    index_t idx = idx_above_ + complex_.binom()(j_, k_ + 1) + idx_below_;
    --j_;
    return {idx, diam};
  }

 private:
  const RipsComplex& complex_;
  IndexDiam simplex_;
  std::vector<index_t> vertices_;
  index_t idx_below_ = 0, idx_above_ = 0, j_ = 0, k_ = 0;
};

// Compressed columns of the implicit reduction matrix V.
class ReductionMatrix {
 public:
  void append_column() { bounds_.push_back(entries_.size()); }
  void push_back(const IndexDiam& e) {
    entries_.push_back(e);
    ++bounds_.back();
  }
  std::size_t column_start(std::size_t j) const {
    return j == 0 ? 0 : bounds_[j - 1];
  }
  std::size_t column_end(std::size_t j) const { return bounds_[j]; }
  const IndexDiam& entry(std::size_t i) const { return entries_[i]; }

 private:
  std::vector<std::size_t> bounds_;
  std::vector<IndexDiam> entries_;
};

IndexDiam pop_pivot(WorkingColumn& column) {
  while (!column.empty()) {
    IndexDiam pivot = column.top();
    column.pop();
    if (column.empty() || column.top().index != pivot.index) return pivot;
    column.pop();  // pairs cancel over the two-element field
  }
  return {};
}

IndexDiam get_pivot(WorkingColumn& column) {
  IndexDiam pivot = pop_pivot(column);
  if (pivot.index != -1) column.push(pivot);
  return pivot;
}

class RipsReduction {
 public:
  RipsReduction(const DistanceMatrix& d, std::size_t max_degree,
                double threshold)
      : complex_(d, static_cast<index_t>(max_degree) + 1),
        threshold_(threshold),
        max_degree_(max_degree) {}

  Barcode run() {
    Barcode barcode;
    barcode.flavor = ComplexFlavor::rips;
    barcode.max_degree = max_degree_;
    barcode.by_degree.assign(max_degree_ + 1, {});

    std::vector<IndexDiam> simplices;        // current dim-simplices
    std::vector<IndexDiam> columns_to_reduce;
    compute_degree_zero(barcode, simplices, columns_to_reduce);

    for (std::size_t degree = 1; degree <= max_degree_; ++degree) {
      std::unordered_map<index_t, std::size_t> pivot_column_index;
      compute_pairs(barcode, columns_to_reduce, pivot_column_index,
                    static_cast<index_t>(degree));
      if (degree < max_degree_)
        assemble_columns(simplices, columns_to_reduce, pivot_column_index,
                         static_cast<index_t>(degree) + 1);
    }
    if (truncated_) barcode.truncated_at = threshold_;
    for (auto& deg : barcode.by_degree)
      std::sort(deg.begin(), deg.end(),
                [](const PersistenceInterval& a, const PersistenceInterval& b) {
                  if (a.birth != b.birth) return a.birth < b.birth;
                  return a.death < b.death;
                });
    return barcode;
  }

 private:
  // Union-find over edges gives the degree-0 pairs; edges that close a cycle
  // become the (already cleared) columns of the degree-1 reduction.
  void compute_degree_zero(Barcode& barcode, std::vector<IndexDiam>& edges_out,
                           std::vector<IndexDiam>& columns_to_reduce) {
    const index_t n = complex_.n();
    std::vector<IndexDiam> edges;
    for (index_t i = 0; i < n; ++i)
      for (index_t j = 0; j < i; ++j) {
        double d = complex_.dist(i, j);
        if (d <= threshold_)
          edges.push_back(
              {complex_.binom()(i, 2) + j, d});
      }
    std::sort(edges.begin(), edges.end(),
              [](const IndexDiam& a, const IndexDiam& b) {
                return a.diameter < b.diameter ||
                       (a.diameter == b.diameter && a.index < b.index);
              });

    UnionFind uf(static_cast<std::size_t>(n));
    std::vector<index_t> vs;
    columns_to_reduce.clear();
    for (const IndexDiam& e : edges) {
      complex_.vertices_of(e.index, 1, vs);
      if (uf.unite(static_cast<std::size_t>(vs[0]),
                   static_cast<std::size_t>(vs[1]))) {
        if (e.diameter > 0)
          barcode.by_degree[0].push_back({0, 0.0, e.diameter});
      } else {
        columns_to_reduce.push_back(e);
      }
    }
    if (uf.components() > 1) truncated_ = true;
    std::sort(columns_to_reduce.begin(), columns_to_reduce.end(),
              reverse_filtration_less);
    edges_out = std::move(edges);
  }

  IndexDiam init_coboundary_and_get_pivot(
      const IndexDiam& simplex, index_t dim, WorkingColumn& working_coboundary,
      const std::unordered_map<index_t, std::size_t>& pivot_column_index) {
    // Emergent pair shortcut: a cofacet of equal diameter that is not yet a
    // pivot is this column's final pivot; the column body stays implicit.
    bool check_emergent = true;
    cofacet_buffer_.clear();
    enumerator_.set_simplex(simplex, dim);
    while (enumerator_.has_next()) {
      IndexDiam cofacet = enumerator_.next();
      if (cofacet.diameter > threshold_) continue;
      cofacet_buffer_.push_back(cofacet);
      if (check_emergent && cofacet.diameter == simplex.diameter) {
        if (pivot_column_index.find(cofacet.index) == pivot_column_index.end())
          return cofacet;
        check_emergent = false;
      }
    }
    for (const IndexDiam& c : cofacet_buffer_) working_coboundary.push(c);
    return get_pivot(working_coboundary);
  }

  void add_simplex_coboundary(const IndexDiam& simplex, index_t dim,
                              WorkingColumn& working_reduction,
                              WorkingColumn& working_coboundary) {
    working_reduction.push(simplex);
    enumerator2_.set_simplex(simplex, dim);
    while (enumerator2_.has_next()) {
      IndexDiam cofacet = enumerator2_.next();
      if (cofacet.diameter <= threshold_) working_coboundary.push(cofacet);
    }
  }

  void add_coboundary(const ReductionMatrix& reduction,
                      const std::vector<IndexDiam>& columns_to_reduce,
                      std::size_t column_to_add, index_t dim,
                      WorkingColumn& working_reduction,
                      WorkingColumn& working_coboundary) {
    add_simplex_coboundary(columns_to_reduce[column_to_add], dim,
                           working_reduction, working_coboundary);
    for (std::size_t i = reduction.column_start(column_to_add);
         i < reduction.column_end(column_to_add); ++i)
      add_simplex_coboundary(reduction.entry(i), dim, working_reduction,
                             working_coboundary);
  }

  void compute_pairs(
      Barcode& barcode, const std::vector<IndexDiam>& columns_to_reduce,
      std::unordered_map<index_t, std::size_t>& pivot_column_index,
      index_t dim) {
    ReductionMatrix reduction;
    pivot_column_index.reserve(columns_to_reduce.size());
    for (std::size_t j = 0; j < columns_to_reduce.size(); ++j) {
      reduction.append_column();
      WorkingColumn working_reduction, working_coboundary;
      const IndexDiam column = columns_to_reduce[j];
      IndexDiam pivot = init_coboundary_and_get_pivot(
          column, dim, working_coboundary, pivot_column_index);
      for (;;) {
        if (pivot.index != -1) {
          auto it = pivot_column_index.find(pivot.index);
          if (it != pivot_column_index.end()) {
            add_coboundary(reduction, columns_to_reduce, it->second, dim,
                           working_reduction, working_coboundary);
            pivot = get_pivot(working_coboundary);
          } else {
            if (pivot.diameter > column.diameter)
              barcode.by_degree[dim].push_back(
                  {static_cast<std::size_t>(dim), column.diameter,
                   pivot.diameter});
            pivot_column_index.emplace(pivot.index, j);
            IndexDiam e = pop_pivot(working_reduction);
            while (e.index != -1) {
              reduction.push_back(e);
              e = pop_pivot(working_reduction);
            }
            break;
          }
        } else {
          // Zero column: essential class, only possible below the enclosing
          // radius; excluded from the barcode and flagged.
          truncated_ = true;
          break;
        }
      }
    }
  }

  void assemble_columns(
      std::vector<IndexDiam>& simplices,
      std::vector<IndexDiam>& columns_to_reduce,
      const std::unordered_map<index_t, std::size_t>& pivot_column_index,
      index_t dim) {
    std::vector<IndexDiam> next;
    columns_to_reduce.clear();
    CoboundaryEnumerator cofacets(complex_);
    for (const IndexDiam& s : simplices) {
      cofacets.set_simplex(s, dim - 1);
      while (cofacets.has_next(false)) {
        IndexDiam cofacet = cofacets.next();
        if (cofacet.diameter > threshold_) continue;
        next.push_back(cofacet);
        if (pivot_column_index.find(cofacet.index) == pivot_column_index.end())
          columns_to_reduce.push_back(cofacet);  // clearing
      }
    }
    simplices.swap(next);
    std::sort(columns_to_reduce.begin(), columns_to_reduce.end(),
              reverse_filtration_less);
  }

  RipsComplex complex_;
  CoboundaryEnumerator enumerator_{complex_};
  CoboundaryEnumerator enumerator2_{complex_};
  std::vector<IndexDiam> cofacet_buffer_;
  double threshold_;
  std::size_t max_degree_;
  bool truncated_ = false;
};

}  // namespace

Barcode rips_persistence(const DistanceMatrix& d, std::size_t max_degree,
                         double threshold) {
  if (d.size() == 0) throw std::invalid_argument("empty input");
  double t = threshold;
  if (!(t < std::numeric_limits<double>::infinity()))
    t = enclosing_radius(d);
  RipsReduction reduction(d, max_degree, t);
  return reduction.run();
}

}  // namespace phdim
