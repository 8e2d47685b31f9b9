#include "toric/matrix.hpp"

namespace toric {

RatVector to_rational(std::span<const Integer> v) { return RatVector(v.begin(), v.end()); }

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

std::optional<IntVector> to_integer(std::span<const Rational> v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_integer()) return std::nullopt;
    out.push_back(x.num());
  }
  return out;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector scale(const Integer& k, const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
  return out;
}

RatVector add(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVector scale(const Rational& k, const RatVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
  return out;
}

bool is_zero(std::span<const Integer> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// Fraction-free (Bareiss) forward elimination. Returns the rank; `sign` tracks
// row swaps and `last_pivot` holds the final pivot, which for a nonsingular
// square matrix equals the determinant up to that sign.
std::size_t bareiss(IntMatrix& m, int& sign, Integer& last_pivot) {
  sign = 1;
  Integer prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.swap_rows(p, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = exact_div(m(r, c) * m(i, j) - m(i, c) * m(r, j), prev);
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  last_pivot = prev;
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  IntMatrix work = m;
  int sign;
  Integer pivot;
  return bareiss(work, sign, pivot);
}

std::size_t rank(std::span<const IntVector> rows, std::size_t cols) {
  return rank(IntMatrix::from_rows(rows, cols));
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

Integer determinant(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  if (m.rows() == 0) return Integer(1);
  IntMatrix work = m;
  int sign;
  Integer pivot;
  if (bareiss(work, sign, pivot) < m.rows()) return Integer(0);
  return sign < 0 ? -pivot : pivot;
}

Rational determinant(const RatMatrix& m) {
  assert(m.rows() == m.cols());
  RatMatrix a = m;
  Rational det(1);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t p = c;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) return Rational(0);
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace toric
