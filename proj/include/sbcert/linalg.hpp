#pragma once

// Dense Gaussian elimination over an exact field. T is Rational or FieldElem;
// both provide +, -, *, unary - and free is_zero() and reciprocal().

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sbcert/rational.hpp"

namespace sbcert {

template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& x, const Matrix<T>& y) {
  assert(x.cols() == y.rows());
  const T zero = x(0, 0) - x(0, 0);
  Matrix<T> out(x.rows(), y.cols(), zero);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) {
      T acc = zero;
      for (std::size_t l = 0; l < x.cols(); ++l) acc = acc + x(i, l) * y(l, j);
      out(i, j) = acc;
    }
  return out;
}

namespace detail {

// Reduces m in place to row echelon form over its first `pivot_cols` columns.
// Returns the pivot column of each pivot row and the number of row swaps.
template <class T>
std::pair<std::vector<std::size_t>, std::size_t> echelon(Matrix<T>& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t swaps = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      m.swap_rows(sel, row);
      ++swaps;
    }
    const T inv = reciprocal(m(row, col));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (is_zero(m(r, col))) continue;
      const T f = m(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!is_zero(m(row, c))) m(r, c) = m(r, c) - f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(pivots), swaps};
}

}  // namespace detail

template <class T>
std::size_t rank(Matrix<T> m) {
  return detail::echelon(m, m.cols()).first.size();
}

template <class T>
T determinant(Matrix<T> m) {
  assert(m.rows() == m.cols() && m.rows() > 0);
  const auto [pivots, swaps] = detail::echelon(m, m.cols());
  if (pivots.size() < m.rows()) return m(0, 0) - m(0, 0);
  T det = m(0, 0);
  for (std::size_t i = 1; i < m.rows(); ++i) det = det * m(i, i);
  if (swaps % 2 == 1) det = -det;
  return det;
}

/// Solves a·x = b for square a; nullopt when a is singular.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  const std::size_t n = a.rows();
  assert(a.cols() == n && b.size() == n);
  Matrix<T> aug(n, n + 1, b[0] - b[0]);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  if (detail::echelon(aug, n).first.size() < n) return std::nullopt;
  std::vector<T> x(n, b[0] - b[0]);
  for (std::size_t i = n; i-- > 0;) {
    T acc = aug(i, n);
    for (std::size_t c = i + 1; c < n; ++c) acc = acc - aug(i, c) * x[c];
    x[i] = acc * reciprocal(aug(i, i));
  }
  return x;
}

/// Inverse of a square matrix; nullopt when singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a, const T& one) {
  const std::size_t n = a.rows();
  const T zero = one - one;
  Matrix<T> aug(n, 2 * n, zero);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = one;
  }
  if (detail::echelon(aug, n).first.size() < n) return std::nullopt;
  for (std::size_t i = n; i-- > 0;) {
    const T inv = reciprocal(aug(i, i));
    for (std::size_t c = i; c < 2 * n; ++c) aug(i, c) = aug(i, c) * inv;
    for (std::size_t r = 0; r < i; ++r) {
      if (is_zero(aug(r, i))) continue;
      const T f = aug(r, i);
      for (std::size_t c = i; c < 2 * n; ++c) aug(r, c) = aug(r, c) - f * aug(i, c);
    }
  }
  Matrix<T> out(n, n, zero);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

}  // namespace sbcert
