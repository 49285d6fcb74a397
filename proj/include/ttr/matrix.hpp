#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ttr/exact.hpp"

namespace ttr {

/// Dense square matrix. Indices are 1-based to match card labels (rows) and
/// deck positions (columns).
template <typename T>
class Matrix {
 public:
  Matrix() = default;

  explicit Matrix(std::size_t n, const T& fill = T(0)) : n_(n), data_(n * n, fill) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 1; i <= n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t row, std::size_t col) { return data_[index(row, col)]; }
  const T& operator()(std::size_t row, std::size_t col) const { return data_[index(row, col)]; }

  /// Bounds-checked access.
  const T& at(std::size_t row, std::size_t col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_) throw std::out_of_range("matrix index out of range");
    return (*this)(row, col);
  }

  T row_sum(std::size_t row) const {
    T s(0);
    for (std::size_t k = 1; k <= n_; ++k) s += (*this)(row, k);
    return s;
  }

  T col_sum(std::size_t col) const {
    T s(0);
    for (std::size_t j = 1; j <= n_; ++j) s += (*this)(j, col);
    return s;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  std::size_t index(std::size_t row, std::size_t col) const { return (row - 1) * n_ + (col - 1); }

  std::size_t n_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mat_mul: dimension mismatch");
  const std::size_t n = a.size();
  Matrix<T> c(n);
  T prod;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t t = 1; t <= n; ++t) {
      const T& lhs = a(i, t);
      if (lhs == 0) continue;
      for (std::size_t j = 1; j <= n; ++j) {
        prod = lhs * b(t, j);
        c(i, j) += prod;
      }
    }
  return c;
}

/// Square-and-multiply; a^0 is the identity.
template <typename T>
Matrix<T> mat_pow(const Matrix<T>& a, unsigned long m) {
  Matrix<T> result = Matrix<T>::identity(a.size());
  Matrix<T> base = a;
  while (m > 0) {
    if (m & 1UL) result = mat_mul(result, base);
    m >>= 1;
    if (m > 0) base = mat_mul(base, base);
  }
  return result;
}

/// Every entry in [0, 1] and every row sums to exactly 1.
template <typename T>
bool is_row_stochastic(const Matrix<T>& a) {
  for (std::size_t j = 1; j <= a.size(); ++j) {
    for (std::size_t k = 1; k <= a.size(); ++k)
      if (a(j, k) < 0 || a(j, k) > 1) return false;
    if (a.row_sum(j) != 1) return false;
  }
  return true;
}

template <typename T>
bool is_doubly_stochastic(const Matrix<T>& a) {
  if (!is_row_stochastic(a)) return false;
  for (std::size_t k = 1; k <= a.size(); ++k)
    if (a.col_sum(k) != 1) return false;
  return true;
}

}  // namespace ttr
