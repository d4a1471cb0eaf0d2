#pragma once

#include "speclab/polynomial.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace speclab {

/// Row-major dense matrix over an exact field.
template <class C>
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, C(0)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = C(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  C& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const C& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(Error::Kind::DimensionMismatch, "matrix product shape mismatch");
    DenseMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const C& aik = a(i, k);
        if (coeff_is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (coeff_is_zero(b(k, j))) continue;
          r(i, j) += aik * b(k, j);
        }
      }
    return r;
  }
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    a.check_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
    a.check_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend DenseMatrix operator*(DenseMatrix a, const C& s) {
    for (auto& v : a.data_) v *= s;
    return a;
  }
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!coeff_is_zero(v)) return false;
    return true;
  }

private:
  void check_shape(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Error::Kind::DimensionMismatch, "matrix shape mismatch");
  }
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<C> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class C>
std::vector<std::size_t> rref(DenseMatrix<C>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && coeff_is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const C inv = C(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || coeff_is_zero(m(r, col))) continue;
      const C f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!coeff_is_zero(m(row, c))) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class C>
std::size_t rank(DenseMatrix<C> m) {
  return rref(m).size();
}

/// Basis of the right null space.
template <class C>
std::vector<std::vector<C>> kernel(DenseMatrix<C> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<C>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<C> v(m.cols(), C(0));
    v[free] = C(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves the square system m x = b; throws when m is singular.
template <class C>
std::vector<C> solve(const DenseMatrix<C>& m, const std::vector<C>& b) {
  if (m.rows() != m.cols() || b.size() != m.rows())
    throw Error(Error::Kind::DimensionMismatch, "solve needs a square system");
  const std::size_t n = m.rows();
  DenseMatrix<C> aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) throw Error(Error::Kind::Internal, "singular linear system");
  std::vector<C> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
  return x;
}

template <class C>
std::vector<C> mat_vec(const DenseMatrix<C>& m, const std::vector<C>& v) {
  if (v.size() != m.cols()) throw Error(Error::Kind::DimensionMismatch, "matrix-vector shape mismatch");
  std::vector<C> out(m.rows(), C(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!coeff_is_zero(m(r, c)) && !coeff_is_zero(v[c])) out[r] += m(r, c) * v[c];
  return out;
}

// ---------------------------------------------------------------------------------------------

template <class Key, class C, class Cmp>
using SparseVec = std::map<Key, C, Cmp>;

template <class Key, class C, class Cmp>
void axpy(SparseVec<Key, C, Cmp>& y, const C& a, const SparseVec<Key, C, Cmp>& x) {
  if (coeff_is_zero(a)) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, C(0));
    it->second += a * v;
    if (coeff_is_zero(it->second)) y.erase(it);
  }
}

/// Incrementally maintained reduced echelon basis of a span of sparse vectors. The pivot of a
/// row is its largest key under Cmp, so for polynomial keys pivoting follows the term order.
template <class Key, class C, class Cmp = std::less<Key>>
class SpanBuilder {
public:
  using Vec = SparseVec<Key, C, Cmp>;

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<Key>& pivots() const { return pivots_; }

  Vec reduce(Vec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      auto it = v.find(pivots_[k]);
      if (it == v.end()) continue;
      const C f = -it->second;
      axpy(v, f, rows_[k]);
    }
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Adds v when it is independent of the span; returns whether the rank grew.
  bool insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.empty()) return false;
    const Key pivot = r.rbegin()->first;
    const C inv = C(1) / r.rbegin()->second;
    for (auto& [k, c] : r) c *= inv;
    for (auto& row : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      const C f = -it->second;
      axpy(row, f, r);
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
  }

  /// Coordinates of v against rows(); nullopt when v is outside the span.
  std::optional<std::vector<C>> coordinates(const Vec& v) const {
    std::vector<C> coords(rows_.size(), C(0));
    Vec residual = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      auto it = v.find(pivots_[k]);
      if (it == v.end()) continue;
      coords[k] = it->second;
      axpy(residual, C(-it->second), rows_[k]);
    }
    if (!residual.empty()) return std::nullopt;
    return coords;
  }

private:
  std::vector<Vec> rows_;
  std::vector<Key> pivots_;
};

/// Exact rank of a family of polynomials (as coefficient vectors over their monomials).
template <class C>
std::size_t poly_rank(const std::vector<Poly<C>>& family) {
  SpanBuilder<Monomial, C, MonomialOrder> span;
  for (const auto& p : family) span.insert(p.terms());
  return span.rank();
}

}  // namespace speclab
