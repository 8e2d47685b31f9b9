#include "toric/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toric::oracle {

namespace {

using Vec = std::vector<Rational>;

Rational det(std::vector<Vec> m) {
  const std::size_t n = m.size();
  Rational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

// Some solution of A x = b, assuming one exists.
Vec solve(std::vector<Vec> a, Vec b, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    Rational inv = Rational(1) / a[row][c];
    for (auto& x : a[row]) x *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[row][k];
      b[r] -= f * b[row];
    }
    pivots.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < a.size(); ++r)
    if (!b[r].is_zero()) throw std::invalid_argument("oracle: the log discrepancy system is inconsistent");
  Vec x(n, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t residue(const Integer& y, std::int64_t d) { return floor_mod(y, Integer(d)).to_int64(); }

}  // namespace

std::vector<std::vector<Integer>> supporting_normals(std::size_t n, const std::vector<std::vector<Integer>>& rays) {
  std::vector<std::vector<Integer>> out;
  const std::size_t k = rays.size();
  std::vector<std::size_t> pick(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) pick[i] = i;
  if (n == 1) {
    out.push_back({rays.front()[0].sign() > 0 ? Integer(1) : Integer(-1)});
    return out;
  }
  while (true) {
    // Generalized cross product of the chosen rays.
    std::vector<Integer> h(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::vector<Vec> minor;
      for (std::size_t r : pick) {
        Vec row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != col) row.push_back(Rational(rays[r][c]));
        minor.push_back(std::move(row));
      }
      Rational m = det(minor);
      h[col] = (col % 2 == 0 ? m : -m).num();
    }
    bool nonzero = std::any_of(h.begin(), h.end(), [](const Integer& x) { return !x.is_zero(); });
    if (nonzero) {
      bool pos = true, neg = true;
      for (const auto& r : rays) {
        Integer s(0);
        for (std::size_t c = 0; c < n; ++c) s += h[c] * r[c];
        if (s.sign() < 0) pos = false;
        if (s.sign() > 0) neg = false;
      }
      if (pos) out.push_back(h);
      if (neg && !pos) {
        for (auto& x : h) x = -x;
        out.push_back(h);
      }
    }
    // Next (n-1)-subset in lexicographic order.
    std::size_t i = n - 1;
    while (i > 0 && pick[i - 1] == k - (n - 1) + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n - 1; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

Result brute_force(const Germ& g, std::optional<Rational> low, std::optional<Rational> high) {
  const std::size_t n = g.dim;

  // N lies in (1/D) Z^n; scaled by D, it is Z^n-translates of a residue group H.
  Integer big_d(1);
  for (const auto& v : g.lattice_extra)
    for (const auto& x : v) big_d = lcm(big_d, x.den());
  const std::int64_t D = big_d.to_int64();
  std::set<std::vector<std::int64_t>> group{std::vector<std::int64_t>(n, 0)};
  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& v : g.lattice_extra) {
    std::vector<std::int64_t> r;
    for (const auto& x : v) r.push_back(residue((x * Rational(big_d)).num(), D));
    gens.push_back(r);
  }
  std::vector<std::vector<std::int64_t>> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& a : frontier)
      for (const auto& gv : gens) {
        std::vector<std::int64_t> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = (a[i] + gv[i]) % D;
        if (group.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  auto in_lattice = [&](const std::vector<Integer>& y) {
    std::vector<std::int64_t> r;
    for (const auto& x : y) r.push_back(residue(x, D));
    return group.count(r) > 0;
  };

  // Rays as the shortest vectors of N on each ray, scaled by D.
  std::vector<std::vector<Integer>> scaled_rays;
  std::vector<Vec> rays;
  for (const auto& r : g.rays) {
    Integer c(0);
    for (const auto& x : r) c = gcd(c, x);
    std::vector<Integer> best;
    for (std::int64_t k = 1; k <= D; ++k) {
      if (D % k != 0) continue;
      std::vector<Integer> y;
      for (const auto& x : r) y.push_back(exact_div(x, c) * Integer(D / k));
      if (in_lattice(y)) best = y;
    }
    scaled_rays.push_back(best);
    Vec v;
    for (const auto& x : best) v.push_back(Rational(x, big_d));
    rays.push_back(v);
  }

  Vec rhs;
  for (std::size_t i = 0; i < rays.size(); ++i)
    rhs.push_back(Rational(1) - (g.boundary.empty() ? Rational(0) : g.boundary[i]));
  Vec L = solve(rays, rhs, n);

  auto normals = supporting_normals(n, scaled_rays);

  Vec sum(n, Rational(0));
  for (const auto& r : rays)
    for (std::size_t i = 0; i < n; ++i) sum[i] += r[i];
  Rational bound = dot(L, sum);
  Rational top = bound;
  if (high && *high > top) top = *high;

  std::vector<Integer> lo(n, Integer(0)), hi(n, Integer(0));
  for (const auto& r : rays) {
    Rational t = top / dot(L, r);
    for (std::size_t i = 0; i < n; ++i) {
      Rational y = t * r[i] * Rational(big_d);
      lo[i] = std::min(lo[i], y.floor());
      hi[i] = std::max(hi[i], y.ceil());
    }
  }

  Result res;
  bool found = false;
  std::vector<Integer> y(lo);
  while (true) {
    bool inside = in_lattice(y);
    for (std::size_t f = 0; inside && f < normals.size(); ++f) {
      Integer s(0);
      for (std::size_t i = 0; i < n; ++i) s += normals[f][i] * y[i];
      if (s.sign() <= 0) inside = false;
    }
    if (inside) {
      Vec x;
      for (const auto& c : y) x.push_back(Rational(c, big_d));
      Rational v = dot(L, x);
      if (v <= bound) {
        if (!found || v < res.mld) {
          res.mld = v;
          res.minimizers.clear();
          found = true;
        }
        if (v == res.mld) res.minimizers.push_back(x);
      }
      if (low && high && *low <= v && v < *high) res.window.push_back({x, v});
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      std::size_t k = n - 1 - i;
      if (y[k] < hi[k]) {
        y[k] += Integer(1);
        break;
      }
      y[k] = lo[k];
    }
    if (i == n) break;
  }
  std::sort(res.minimizers.begin(), res.minimizers.end());
  std::sort(res.window.begin(), res.window.end(), [](const Point& a, const Point& b) { return a.coords < b.coords; });
  return res;
}

}  // namespace toric::oracle
