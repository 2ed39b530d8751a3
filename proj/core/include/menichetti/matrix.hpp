#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "menichetti/error.hpp"

namespace menichetti {

// Dense matrix over any exact field type T providing + - * inv() is_zero()
// and free functions zero_like(T), one_like(T).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : r_(rows), c_(cols), d_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty() || rows[0].empty()) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
    Matrix m(rows.size(), rows[0].size(), rows[0][0]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.c_) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

  std::vector<T> row(std::size_t i) const { return {d_.begin() + i * c_, d_.begin() + (i + 1) * c_}; }

  Matrix transpose() const {
    Matrix t(c_, r_, d_.front());
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != c_) throw Error(ErrorCode::DimensionMismatch, "vector length does not match columns");
    std::vector<T> out(r_, zero_like(d_.front()));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
    Matrix out(a.r_, b.c_, zero_like(a.d_.front()));
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.c_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> d_;
};

template <class T>
T determinant(Matrix<T> a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw Error(ErrorCode::NonSquare, "determinant needs a square matrix");
  const std::size_t n = a.rows();
  T det = one_like(a(0, 0));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return zero_like(det);
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    T inv = a(col, col).inv();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      T f = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <class T>
Echelon<T> rref(Matrix<T> a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    T inv = a(r, col).inv();
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, col).is_zero()) continue;
      T f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& a) {
  return rref(a).pivots.size();
}

// Basis of the right kernel {v : a v = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& a) {
  auto e = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  const T zero = zero_like(a(0, 0)), one = one_like(a(0, 0));
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(n, zero);
    v[free] = one;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  Matrix<T> aug(a.rows(), a.cols() + 1, zero_like(a(0, 0)));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto e = rref(aug);
  std::vector<T> x(a.cols(), zero_like(a(0, 0)));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

// Reduced row echelon basis of the span of the given vectors.
template <class T>
std::vector<std::vector<T>> row_basis(const std::vector<std::vector<T>>& vectors) {
  if (vectors.empty()) return {};
  auto e = rref(Matrix<T>::from_rows(vectors));
  std::vector<std::vector<T>> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

}  // namespace menichetti
