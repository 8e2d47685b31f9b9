#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toric/integer.hpp"
#include "toric/rational.hpp"

namespace toric {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Dense row-major matrix with exact entries.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  // `cols` is only consulted when `rows` is empty.
  static Matrix from_rows(std::span<const std::vector<T>> rows, std::size_t cols = 0) {
    Matrix m(rows.size(), rows.empty() ? cols : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == m.cols_);
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
    return from_rows(std::span<const std::vector<T>>(rows), cols);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
  std::vector<T> col_vector(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <typename A, typename B>
auto dot(std::span<const A> a, std::span<const B> b) {
  assert(a.size() == b.size());
  using R = std::conditional_t<std::is_same_v<A, Integer> && std::is_same_v<B, Integer>, Integer, Rational>;
  R sum(0);
  for (std::size_t i = 0; i < a.size(); ++i) sum += R(a[i]) * R(b[i]);
  return sum;
}
inline Integer dot(const IntVector& a, const IntVector& b) { return dot<Integer, Integer>(a, b); }
inline Rational dot(const RatVector& a, const RatVector& b) { return dot<Rational, Rational>(a, b); }
inline Rational dot(const RatVector& a, const IntVector& b) { return dot<Rational, Integer>(a, b); }
inline Rational dot(const IntVector& a, const RatVector& b) { return dot<Integer, Rational>(a, b); }

RatVector to_rational(std::span<const Integer> v);
RatMatrix to_rational(const IntMatrix& m);
// Integer vector when every entry is integral.
std::optional<IntVector> to_integer(std::span<const Rational> v);

IntVector add(const IntVector& a, const IntVector& b);
IntVector scale(const Integer& k, const IntVector& v);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const Rational& k, const RatVector& v);
bool is_zero(std::span<const Integer> v);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(std::span<const IntVector> rows, std::size_t cols);
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

}  // namespace toric
