#pragma once

// Column-sparse matrices and dense vectors over the coefficient rings, plus
// exact row reduction over the field ones.

#include "qschur/cyclo.hpp"
#include "qschur/laurent.hpp"
#include "qschur/ratfunc.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qschur {

inline bool ring_is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline bool ring_is_zero(const RatFunc& x) { return x.is_zero(); }
template <class C>
bool ring_is_zero(const CycloPoly<C>& x) { return x.is_zero(); }
inline bool ring_is_zero(const Fp& x) { return x.is_zero(); }
inline bool ring_is_zero(const Integer& x) { return x == 0; }
inline bool ring_is_zero(const Rational& x) { return x == 0; }

inline RatFunc ring_inverse(const RatFunc& x) { return x.inverse(); }
inline CycloField ring_inverse(const CycloField& x) { return x.inverse(); }
inline Fp ring_inverse(const Fp& x) { return x.inverse(); }
inline Rational ring_inverse(const Rational& x) { return 1 / x; }

template <class R>
using DenseVec = std::vector<R>;

template <class R>
bool is_zero_vec(const DenseVec<R>& v) {
  return std::all_of(v.begin(), v.end(), [](const R& x) { return ring_is_zero(x); });
}

// cols[j] lists the nonzero entries (i, value) of column j, sorted by i.
template <class R>
struct SparseMatrix {
  int rows = 0;
  std::vector<std::vector<std::pair<int, R>>> cols;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(static_cast<std::size_t>(c)) {}

  int ncols() const { return static_cast<int>(cols.size()); }

  DenseVec<R> apply(const DenseVec<R>& x) const {
    DenseVec<R> out(static_cast<std::size_t>(rows));
    for (int j = 0; j < ncols(); ++j) {
      if (ring_is_zero(x[j])) continue;
      for (const auto& [i, a] : cols[j]) out[i] += a * x[j];
    }
    return out;
  }

  DenseVec<R> column(int j) const {
    DenseVec<R> out(static_cast<std::size_t>(rows));
    for (const auto& [i, a] : cols[j]) out[i] = a;
    return out;
  }

  void set_column(int j, const DenseVec<R>& v) {
    cols[j].clear();
    for (int i = 0; i < rows; ++i)
      if (!ring_is_zero(v[i])) cols[j].emplace_back(i, v[i]);
  }

  bool is_zero() const {
    return std::all_of(cols.begin(), cols.end(), [](const auto& c) { return c.empty(); });
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols;
  }
};

// (x o y)(e_j) = x(y(e_j))
template <class R>
SparseMatrix<R> compose(const SparseMatrix<R>& x, const SparseMatrix<R>& y) {
  SparseMatrix<R> out(x.rows, y.ncols());
  for (int j = 0; j < y.ncols(); ++j) {
    if (y.cols[j].empty()) continue;
    DenseVec<R> acc(static_cast<std::size_t>(x.rows));
    for (const auto& [k, a] : y.cols[j])
      for (const auto& [i, b] : x.cols[k]) acc[i] += b * a;
    out.set_column(j, acc);
  }
  return out;
}

template <class R>
SparseMatrix<R> add(const SparseMatrix<R>& x, const SparseMatrix<R>& y, const R& scale_y) {
  SparseMatrix<R> out(x.rows, x.ncols());
  for (int j = 0; j < x.ncols(); ++j) {
    DenseVec<R> acc = x.column(j);
    for (const auto& [i, b] : y.cols[j]) acc[i] += b * scale_y;
    out.set_column(j, acc);
  }
  return out;
}

template <class R>
SparseMatrix<R> scaled(const SparseMatrix<R>& x, const R& s) {
  SparseMatrix<R> out(x.rows, x.ncols());
  for (int j = 0; j < x.ncols(); ++j) {
    for (const auto& [i, a] : x.cols[j]) {
      R p = a * s;
      if (!ring_is_zero(p)) out.cols[j].emplace_back(i, std::move(p));
    }
  }
  return out;
}

template <class R, class S, class F>
SparseMatrix<S> map_matrix(const SparseMatrix<R>& x, F&& f) {
  SparseMatrix<S> out(x.rows, x.ncols());
  for (int j = 0; j < x.ncols(); ++j) {
    for (const auto& [i, a] : x.cols[j]) {
      S b = f(a);
      if (!ring_is_zero(b)) out.cols[j].emplace_back(i, std::move(b));
    }
  }
  return out;
}

// ---- row reduction over a field K ----

// A subspace of K^dim in reduced echelon form.
template <class K>
class Echelon {
 public:
  explicit Echelon(int dim = 0) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<DenseVec<K>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return piv_; }

  // Reduces v against the current rows (pivot entries cleared).
  DenseVec<K> reduce(DenseVec<K> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const int p = piv_[k];
      if (ring_is_zero(v[p])) continue;
      const K f = v[p];
      for (int c = 0; c < dim_; ++c)
        if (!ring_is_zero(rows_[k][c])) v[c] -= f * rows_[k][c];
    }
    return v;
  }

  bool contains(const DenseVec<K>& v) const { return is_zero_vec(reduce(v)); }

  // Returns true when v enlarged the span.
  bool insert(DenseVec<K> v) {
    v = reduce(std::move(v));
    int p = -1;
    for (int c = 0; c < dim_; ++c)
      if (!ring_is_zero(v[c])) {
        p = c;
        break;
      }
    if (p < 0) return false;
    const K inv = ring_inverse(v[p]);
    for (auto& x : v)
      if (!ring_is_zero(x)) x = x * inv;
    for (auto& row : rows_) {
      if (ring_is_zero(row[p])) continue;
      const K f = row[p];
      for (int c = 0; c < dim_; ++c)
        if (!ring_is_zero(v[c])) row[c] -= f * v[c];
    }
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    piv_.insert(piv_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  bool contains_all(const Echelon& o) const {
    return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const auto& r) { return contains(r); });
  }
  friend bool same_span(const Echelon& a, const Echelon& b) {
    return a.rank() == b.rank() && a.contains_all(b);
  }

  // Coordinates of v modulo the span, in the complement basis of non-pivot
  // standard vectors.
  DenseVec<K> quotient_coords(const DenseVec<K>& v) const {
    const DenseVec<K> red = reduce(v);
    DenseVec<K> out;
    std::size_t k = 0;
    for (int c = 0; c < dim_; ++c) {
      if (k < piv_.size() && piv_[k] == c) {
        ++k;
        continue;
      }
      out.push_back(red[c]);
    }
    return out;
  }
  // Non-pivot positions, in order: the section of the quotient.
  std::vector<int> free_positions() const {
    std::vector<int> out;
    std::size_t k = 0;
    for (int c = 0; c < dim_; ++c) {
      if (k < piv_.size() && piv_[k] == c) {
        ++k;
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

 private:
  int dim_;
  std::vector<DenseVec<K>> rows_;
  std::vector<int> piv_;
};

template <class K>
Echelon<K> span_of(int dim, const std::vector<DenseVec<K>>& vs) {
  Echelon<K> e(dim);
  for (const auto& v : vs) e.insert(v);
  return e;
}

// Basis of { x : sum_j x_j cols_j = 0 } for the vectors cols_j in K^m; one is
// the unit of K.
template <class K>
std::vector<DenseVec<K>> nullspace(int m, const std::vector<DenseVec<K>>& cols, const K& one) {
  const int n = static_cast<int>(cols.size());
  // row-reduce the m x n matrix
  std::vector<DenseVec<K>> a(static_cast<std::size_t>(m), DenseVec<K>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) a[i][j] = cols[j][i];
  std::vector<int> piv_col;
  int row = 0;
  for (int c = 0; c < n && row < m; ++c) {
    int p = row;
    while (p < m && ring_is_zero(a[p][c])) ++p;
    if (p == m) continue;
    std::swap(a[row], a[p]);
    const K inv = ring_inverse(a[row][c]);
    for (auto& x : a[row])
      if (!ring_is_zero(x)) x = x * inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || ring_is_zero(a[i][c])) continue;
      const K f = a[i][c];
      for (int cc = c; cc < n; ++cc)
        if (!ring_is_zero(a[row][cc])) a[i][cc] -= f * a[row][cc];
    }
    piv_col.push_back(c);
    ++row;
  }
  std::vector<DenseVec<K>> out;
  std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
  for (int c : piv_col) is_piv[c] = true;
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    DenseVec<K> x(static_cast<std::size_t>(n));
    x[f] = one;
    for (std::size_t k = 0; k < piv_col.size(); ++k) x[piv_col[k]] = -a[k][f];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace qschur
