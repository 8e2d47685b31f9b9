#include "toric/invariants.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

LatticeBasis orbifold_lattice(const ToricGerm& g) {
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < g.dim(); ++i) gens.push_back(g.lattice().row(i));
  auto rays = g.ambient_rays();
  auto mult = g.multiplicities();
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (!mult[i].is_one()) gens.push_back(scale(Rational(1) / Rational(mult[i]), rays[i]));
  return lattice_span(g.dim(), gens);
}

LogDiscFunctional log_disc_functional(const ToricGerm& g) {
  const auto& rays = g.cone().rays();
  RatMatrix a(rays.size(), g.dim());
  RatVector b;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) a(i, j) = Rational(rays[i][j]);
    b.push_back(Rational(1) - g.boundary()[i]);
  }
  SolveResult s = solve_rational(a, b);
  if (s.kind == SolveResult::Kind::Inconsistent)
    throw Error(ErrorCode::NotQCartier, "no linear function takes the value 1 - coeff on every ray");
  if (s.kind == SolveResult::Kind::Underdetermined)
    throw Error(ErrorCode::NotFullDimensional, "the rays do not determine the log discrepancy function");

  LogDiscFunctional L;
  L.lattice_coeffs = s.solution;
  auto inv = *inverse(g.lattice().basis());
  L.coeffs.assign(g.dim(), Rational(0));
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) L.coeffs[i] += inv(i, j) * L.lattice_coeffs[j];
  return L;
}

namespace {

struct Constraint {
  IntVector a;
  Integer c;  // a . x >= c
};

}  // namespace

std::vector<IntVector> interior_points(const ToricGerm& g, const LogDiscFunctional& L, const Rational& low,
                                       const Rational& high, bool high_inclusive) {
  const std::size_t n = g.dim();
  const auto& rays = g.cone().rays();

  std::vector<Constraint> cons;
  for (const auto& f : g.cone().facets()) cons.push_back({f, Integer(1)});
  Integer den(1);
  for (const auto& x : L.lattice_coeffs) den = lcm(den, x.den());
  IntVector a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = exact_div(L.lattice_coeffs[j].num() * den, L.lattice_coeffs[j].den());
  Rational scaled_low = low * Rational(den), scaled_high = high * Rational(den);
  cons.push_back({a, scaled_low.ceil()});
  Integer upper = high_inclusive ? scaled_high.floor() : scaled_high.ceil() - Integer(1);
  IntVector neg_a;
  for (const auto& x : a) neg_a.push_back(-x);
  cons.push_back({neg_a, -upper});

  // The region is the convex hull of 0 and the points where each ray meets L = high.
  IntVector lo(n, Integer(0)), hi(n, Integer(0));
  for (const auto& r : rays) {
    Rational t = high / L.at_lattice(r);
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = t * Rational(r[j]);
      lo[j] = std::min(lo[j], v.floor());
      hi[j] = std::max(hi[j], v.ceil());
    }
  }

  std::vector<IntVector> out;
  IntVector x(lo);
  const std::size_t last = n - 1;
  while (true) {
    Integer first = lo[last], second = hi[last];
    bool feasible = true;
    for (const auto& con : cons) {
      Integer partial(0);
      for (std::size_t j = 0; j < last; ++j) partial += con.a[j] * x[j];
      Integer rest = con.c - partial;
      const Integer& coef = con.a[last];
      if (coef.sign() > 0) {
        // coef * t >= rest
        first = std::max(first, -floor_div(-rest, coef));
      } else if (coef.sign() < 0) {
        second = std::min(second, floor_div(-rest, -coef));
      } else if (rest.sign() > 0) {
        feasible = false;
      }
      if (!feasible || first > second) break;
    }
    if (feasible)
      for (Integer t = first; t <= second; t += Integer(1)) {
        x[last] = t;
        out.push_back(x);
      }

    std::size_t j = 0;
    for (; j < last; ++j) {
      std::size_t k = last - 1 - j;
      if (x[k] < hi[k]) {
        x[k] += Integer(1);
        break;
      }
      x[k] = lo[k];
    }
    if (j == last) break;
  }
  return out;
}

namespace {

bool ambient_less(const RatVector& a, const RatVector& b) { return a < b; }

}  // namespace

MldResult mld(const ToricGerm& g, std::optional<Rational> bound) {
  auto L = log_disc_functional(g);
  Rational B;
  if (bound) {
    B = *bound;
  } else {
    IntVector s(g.dim(), Integer(0));
    for (const auto& r : g.cone().rays()) s = add(s, r);
    B = L.at_lattice(s);
  }
  auto pts = interior_points(g, L, Rational(0), B, true);
  if (pts.empty())
    throw Error(ErrorCode::NoPointBelowBound, "no interior lattice point has log discrepancy <= " + B.to_string());

  MldResult res;
  res.search_bound = B;
  res.value = L.at_lattice(pts.front());
  for (const auto& p : pts) res.value = std::min(res.value, L.at_lattice(p));
  for (const auto& p : pts)
    if (L.at_lattice(p) == res.value) res.minimizers.push_back(g.to_ambient(p));
  std::sort(res.minimizers.begin(), res.minimizers.end(), ambient_less);
  return res;
}

WindowCount count_window(const ToricGerm& g, const Rational& low, const Rational& high) {
  if (low.sign() <= 0 || high < low)
    throw Error(ErrorCode::InvalidWindow, "window [" + low.to_string() + ", " + high.to_string() + ") is invalid");
  auto L = log_disc_functional(g);
  WindowCount w{low, high, {}};
  if (low == high) return w;
  for (const auto& p : interior_points(g, L, low, high, false)) w.points.push_back({g.to_ambient(p), L.at_lattice(p)});
  std::sort(w.points.begin(), w.points.end(),
            [](const WindowPoint& a, const WindowPoint& b) { return a.point < b.point; });
  return w;
}

FiniteAbelianGroup pi1_reg(const ToricGerm& g) {
  LatticeBasis orb = orbifold_lattice(g);
  auto rays = g.ambient_rays();
  IntMatrix m(rays.size(), g.dim());
  for (std::size_t i = 0; i < rays.size(); ++i) {
    IntVector c = *express_in_basis(orb, rays[i]);
    for (std::size_t j = 0; j < g.dim(); ++j) m(i, j) = c[j];
  }
  SnfResult s = snf(m);
  FiniteAbelianGroup grp;
  grp.free_rank = g.dim() - s.rank;
  for (const auto& d : s.factors)
    if (!d.is_one()) {
      grp.invariant_factors.push_back(d);
      grp.order *= d;
    }
  if (grp.free_rank > 0) grp.order = Integer(0);
  return grp;
}

Rational log_discrepancy_at(const ToricGerm& g, std::span<const Rational> u) {
  if (u.size() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
  auto c = g.to_lattice(u);
  if (!c) throw Error(ErrorCode::NotInteriorPoint, "point is not in the lattice N");
  if (g.cone().classify(*c) != Membership::RelativeInterior || !g.cone().is_full_dimensional())
    throw Error(ErrorCode::NotInteriorPoint, "point is not in the interior of the cone");
  return log_disc_functional(g).at_lattice(*c);
}

}  // namespace toric
