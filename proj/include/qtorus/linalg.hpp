// Dense matrices over exact rings and exact kernels over fields.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtorus {

/// Row-major dense matrix.  T needs +, *, ==, is_zero(); zero entries are
/// skipped in products, which keeps the monomial matrices of this library cheap.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix& operator+=(const Matrix& o) {
    require_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
    }
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
    }
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix out(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  /// Entrywise product with a scalar of the entry type.
  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix out(m.rows_, m.cols_, m.zero_);
    if (s.is_zero()) return out;
    for (std::size_t i = 0; i < m.data_.size(); ++i) {
      if (!m.data_[i].is_zero()) out.data_[i] = s * m.data_[i];
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return !a.first_difference(b); }

  /// Position of the first differing entry in row-major order, if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix& o) const {
    require_shape(o);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!((*this)(i, j) == o(i, j))) return std::pair{i, j};
      }
    }
    return std::nullopt;
  }

 private:
  void require_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  T zero_;
  std::vector<T> data_;
};

/// Basis of the right kernel {v : A v = 0} over a field (T::inverse()).
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> a, const T& one) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(row, j));
    }
    const T inv = a(row, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!a(row, j).is_zero()) a(row, j) = inv * a(row, j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a(i, c).is_zero()) continue;
      const T f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
      }
    }
    pivot_cols.push_back(c);
    ++row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, a.zero());
    v[f] = one;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      if (!a(i, f).is_zero()) v[pivot_cols[i]] = -a(i, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qtorus
