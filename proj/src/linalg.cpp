#include "toric/linalg.hpp"

#include "toric/error.hpp"

namespace toric {

Integer content(std::span<const Integer> v) {
  Integer g(0);
  for (const auto& x : v) {
    if (!x.is_zero()) g = gcd(g, x);
    if (g.is_one()) break;
  }
  return g;
}

IntVector primitive(std::span<const Integer> v) {
  Integer g = content(v);
  if (g.is_zero()) throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
  IntVector out(v.begin(), v.end());
  if (!g.is_one())
    for (auto& x : out) x = exact_div(x, g);
  return out;
}

namespace {

// row[dst] -= q * row[src]
void row_sub(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q.is_zero()) return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m(src, c).is_zero()) m(dst, c) -= q * m(src, c);
}

void col_sub(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q.is_zero()) return;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m(r, src).is_zero()) m(r, dst) -= q * m(r, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  HnfResult res{a, IntMatrix::identity(a.rows())};
  IntMatrix& h = res.H;
  IntMatrix& u = res.U;
  const std::size_t m = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < m; ++c) {
    bool has_pivot = false;
    while (true) {
      // Smallest nonzero entry at or below row r becomes the pivot.
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, c).is_zero()) continue;
        if (best == m || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == m) break;
      has_pivot = true;
      h.swap_rows(best, r);
      u.swap_rows(best, r);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c).is_zero()) continue;
        Integer q = floor_div(h(i, c), h(r, c));
        row_sub(h, i, r, q);
        row_sub(u, i, r, q);
        if (!h(i, c).is_zero()) cleared = false;
      }
      if (cleared) break;
    }
    if (!has_pivot) continue;
    if (h(r, c).sign() < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      row_sub(h, i, r, q);
      row_sub(u, i, r, q);
    }
    ++r;
  }
  return res;
}

SnfResult snf(const IntMatrix& a) {
  SnfResult res{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), {}, 0};
  IntMatrix& s = res.S;
  IntMatrix& u = res.U;
  IntMatrix& v = res.V;
  const std::size_t m = s.rows();
  const std::size_t n = s.cols();

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Move the smallest nonzero entry of the trailing block to (t, t).
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (s(i, j).is_zero()) continue;
        if (bi == m || abs(s(i, j)) < abs(s(bi, bj))) {
          bi = i;
          bj = j;
        }
      }
    if (bi == m) break;
    s.swap_rows(t, bi);
    u.swap_rows(t, bi);
    s.swap_cols(t, bj);
    v.swap_cols(t, bj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t).is_zero()) continue;
        Integer q = floor_div(s(i, t), s(t, t));
        row_sub(s, i, t, q);
        row_sub(u, i, t, q);
        if (!s(i, t).is_zero()) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j).is_zero()) continue;
        Integer q = floor_div(s(t, j), s(t, t));
        col_sub(s, j, t, q);
        col_sub(v, j, t, q);
        if (!s(t, j).is_zero()) dirty = true;
      }
      if (dirty) {
        // A remainder is smaller than the pivot; promote the smallest one.
        std::size_t bi2 = t, bj2 = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (!s(i, t).is_zero() && abs(s(i, t)) < abs(s(bi2, bj2))) {
            bi2 = i;
            bj2 = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (!s(t, j).is_zero() && abs(s(t, j)) < abs(s(bi2, bj2))) {
            bi2 = t;
            bj2 = j;
          }
        s.swap_rows(t, bi2);
        u.swap_rows(t, bi2);
        s.swap_cols(t, bj2);
        v.swap_cols(t, bj2);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!floor_mod(s(i, j), s(t, t)).is_zero()) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_sub(s, t, bad, Integer(-1));
      row_sub(u, t, bad, Integer(-1));
    }
    if (s(t, t).sign() < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
    res.factors.push_back(s(t, t));
    ++res.rank;
  }
  return res;
}

SolveResult solve_rational(const RatMatrix& a, std::span<const Rational> b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // Augmented [A | b], with T tracking row combinations of the original rows.
  RatMatrix aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  RatMatrix t = RatMatrix::identity(m);
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && aug(p, c).is_zero()) ++p;
    if (p == m) continue;
    aug.swap_rows(p, r);
    t.swap_rows(p, r);
    Rational pivot = aug(r, c);
    for (std::size_t j = 0; j <= n; ++j) aug(r, j) /= pivot;
    for (std::size_t j = 0; j < m; ++j) t(r, j) /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug(i, c).is_zero()) continue;
      Rational f = aug(i, c);
      for (std::size_t j = 0; j <= n; ++j) aug(i, j) -= f * aug(r, j);
      for (std::size_t j = 0; j < m; ++j) t(i, j) -= f * t(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  SolveResult res;
  for (std::size_t i = r; i < m; ++i) {
    if (!aug(i, n).is_zero()) {
      res.kind = SolveResult::Kind::Inconsistent;
      res.certificate = t.row_vector(i);
      return res;
    }
  }
  res.solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) res.solution[pivot_cols[i]] = aug(i, n);
  res.kind = r < n ? SolveResult::Kind::Underdetermined : SolveResult::Kind::Unique;
  return res;
}

// ---------------------------------------------------------------- lattices

LatticeBasis LatticeBasis::standard(std::size_t dim) {
  LatticeBasis b;
  b.numerators_ = IntMatrix::identity(dim);
  return b;
}

RatMatrix LatticeBasis::basis() const {
  RatMatrix out(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out(i, j) = Rational(numerators_(i, j), denominator_);
  return out;
}

RatVector LatticeBasis::row(std::size_t i) const {
  RatVector out(dim());
  for (std::size_t j = 0; j < dim(); ++j) out[j] = Rational(numerators_(i, j), denominator_);
  return out;
}

bool LatticeBasis::is_standard() const {
  return denominator_.is_one() && numerators_ == IntMatrix::identity(dim());
}

Rational LatticeBasis::covolume() const {
  Integer den(1);
  for (std::size_t i = 0; i < dim(); ++i) den *= denominator_;
  return Rational(abs(determinant(numerators_)), den);
}

LatticeBasis lattice_span(std::size_t dim, std::span<const RatVector> generators) {
  Integer common(1);
  for (const auto& g : generators) {
    if (g.size() != dim) throw Error(ErrorCode::DimensionMismatch, "lattice generator has wrong length");
    for (const auto& x : g) common = lcm(common, x.den());
  }
  IntMatrix scaled(generators.size(), dim);
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j)
      scaled(i, j) = exact_div(generators[i][j].num() * common, generators[i][j].den());

  IntMatrix h = hnf(scaled).H;
  std::size_t r = 0;
  while (r < h.rows() && !is_zero(h.row(r))) ++r;
  if (r < dim) throw Error(ErrorCode::NotFullRank, "generators do not span the ambient space");

  LatticeBasis out;
  out.numerators_ = IntMatrix(dim, dim);
  Integer g = common;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      out.numerators_(i, j) = h(i, j);
      g = gcd(g, h(i, j));
    }
  if (!g.is_one()) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) out.numerators_(i, j) = exact_div(out.numerators_(i, j), g);
    common = exact_div(common, g);
  }
  out.denominator_ = common;
  return out;
}

LatticeBasis lattice_from_generators(std::size_t dim, std::span<const RatVector> generators) {
  std::vector<RatVector> all(generators.begin(), generators.end());
  for (std::size_t i = 0; i < dim; ++i) {
    RatVector e(dim, Rational(0));
    e[i] = 1;
    all.push_back(std::move(e));
  }
  return lattice_span(dim, all);
}

std::optional<IntVector> express_in_basis(const LatticeBasis& b, std::span<const Rational> v) {
  // c * numerators = D * v with numerators upper triangular: forward substitution.
  const std::size_t n = b.dim();
  if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length does not match lattice dimension");
  const IntMatrix& h = b.numerators();
  IntVector c(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational rhs = v[j] * Rational(b.denominator());
    for (std::size_t i = 0; i < j; ++i) rhs -= Rational(c[i] * h(i, j));
    Rational q = rhs / Rational(h(j, j));
    if (!q.is_integer()) return std::nullopt;
    c[j] = q.num();
  }
  return c;
}

RatVector combine(const LatticeBasis& b, std::span<const Integer> coords) {
  const std::size_t n = b.dim();
  IntVector acc(n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t j = i; j < n; ++j) acc[j] += coords[i] * b.numerators()(i, j);
  }
  RatVector out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = Rational(acc[j], b.denominator());
  return out;
}

IntMatrix saturate(std::span<const IntVector> rows, std::size_t n) {
  IntMatrix a = IntMatrix::from_rows(rows, n);
  SnfResult s = snf(a);
  if (s.rank == n) return IntMatrix::identity(n);
  // Row space of A equals that of S * V^-1; its first `rank` rows are scaled
  // rows of the unimodular V^-1, hence a basis of the saturation.
  auto vinv = inverse(to_rational(s.V));
  IntMatrix basis(s.rank, n);
  for (std::size_t i = 0; i < s.rank; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = (*vinv)(i, j).num();
  IntMatrix h = hnf(basis).H;
  return h;
}

}  // namespace toric
