#pragma once

#include "minrep/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace minrep {

using RationalVector = std::vector<Rational>;

/// Small dense matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& q : data_)
      if (sgn(q) != 0) return false;
    return true;
  }

  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RationalMatrix& operator+=(const RationalMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  RationalMatrix& operator-=(const RationalMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  RationalMatrix& operator*=(const Rational& s) {
    for (auto& q : data_) q *= s;
    return *this;
  }

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    Rational t;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (sgn(bkj) == 0) continue;
          t = aik * bkj;
          c(i, j) += t;
        }
      }
    return c;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

/// Reduced row echelon form in place. Returns the pivot column of each nonzero row.
inline std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  Rational factor;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (sgn(m(row, j)) != 0) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

/// Basis of {v : m v = 0}, one vector per free column.
inline std::vector<RationalVector> kernel(RationalMatrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of a x = b, or nullopt if the system is inconsistent.
inline std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RationalVector x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

/// Matrix whose columns are the given vectors.
inline RationalMatrix from_columns(const std::vector<RationalVector>& cols, std::size_t length) {
  RationalMatrix m(length, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < length; ++i) m(i, j) = cols[j][i];
  return m;
}

/// Exact test via symmetric Gaussian elimination: every pivot must be positive.
inline bool is_positive_definite(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("positive definiteness needs a square matrix");
  const std::size_t n = m.rows();
  Rational f;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(m(k, k)) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m(i, k)) == 0) continue;
      f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return true;
}

/// Incrementally grown subspace of Q^n kept in reduced echelon form.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<RationalVector>& basis() const { return rows_; }

  /// Returns true if v enlarged the span.
  bool insert(RationalVector v) {
    reduce(v);
    std::size_t lead = 0;
    while (lead < ambient_ && sgn(v[lead]) == 0) ++lead;
    if (lead == ambient_) return false;
    const Rational inv = 1 / v[lead];
    for (auto& q : v) q *= inv;
    Rational f;
    for (auto& row : rows_) {
      if (sgn(row[lead]) == 0) continue;
      f = row[lead];
      for (std::size_t j = lead; j < ambient_; ++j)
        if (sgn(v[j]) != 0) row[j] -= f * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
  }

  bool contains(RationalVector v) const {
    reduce(v);
    for (const auto& q : v)
      if (sgn(q) != 0) return false;
    return true;
  }

 private:
  void reduce(RationalVector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("subspace: vector length mismatch");
    Rational f;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (sgn(v[p]) == 0) continue;
      f = v[p];
      for (std::size_t j = p; j < ambient_; ++j)
        if (sgn(rows_[r][j]) != 0) v[j] -= f * rows_[r][j];
    }
  }

  std::size_t ambient_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace minrep
