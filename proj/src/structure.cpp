#include "toric/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "toric/error.hpp"
#include "toric/invariants.hpp"

namespace toric {

std::string_view to_string(Trichotomy::Variant v) {
  switch (v) {
    case Trichotomy::Variant::Simplicial: return "Simplicial";
    case Trichotomy::Variant::FullDimSubcone: return "FullDimSubcone";
    case Trichotomy::Variant::SpanningPair: return "SpanningPair";
  }
  return "?";
}

namespace {

void require_interior(const Cone& c, std::span<const Rational> m) {
  if (m.size() != c.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
  if (c.classify(m) != Membership::RelativeInterior)
    throw Error(ErrorCode::NotInteriorPoint, "point is not in the relative interior of the cone");
}

std::size_t span_rank(const Cone& c, const std::vector<std::size_t>& idx) {
  std::vector<IntVector> rows;
  for (std::size_t i : idx) rows.push_back(c.rays()[i]);
  return rank(rows, c.ambient_dim());
}

std::vector<std::size_t> merge(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// A proper ray subset containing ray r whose cone has m in its relative
// interior. c must be non-simplicial and m interior. Walks from m against r to
// the boundary, then (if the face reached is not simplicial) repeats inside
// that face.
std::vector<std::size_t> claim(const Cone& c, std::span<const Rational> m, std::size_t r) {
  RatVector ray = to_rational(c.rays()[r]);
  auto fm = *c.facet_values(m);
  auto fr = *c.facet_values(ray);
  std::optional<Rational> lambda;
  for (std::size_t k = 0; k < fm.size(); ++k)
    if (fr[k].sign() > 0) {
      Rational q = fm[k] / fr[k];
      if (!lambda || q < *lambda) lambda = q;
    }
  RatVector p = sub(RatVector(m.begin(), m.end()), scale(*lambda, ray));
  Face face = c.minimal_face(p);

  std::vector<std::size_t> tau;
  if (face.rays.size() == face.dim) {
    tau = face.ray_indices;
  } else {
    Cone sub_cone = c.sub_cone(face.ray_indices);
    for (std::size_t i : claim(sub_cone, p, 0)) tau.push_back(*c.ray_index(sub_cone.rays()[i]));
  }
  tau.push_back(r);
  std::sort(tau.begin(), tau.end());
  return tau;
}

// Trichotomy relative to span(c); m in relint(c).
Trichotomy relative_trichotomy(const Cone& c, std::span<const Rational> m) {
  Trichotomy t;
  if (c.is_simplicial()) return t;

  const std::size_t k = c.rays().size();
  if (k > kMaxSubsetRays)
    throw Error(ErrorCode::TooManyRays,
                std::to_string(k) + " rays exceed the subset enumeration limit of " + std::to_string(kMaxSubsetRays));
  std::optional<std::vector<std::size_t>> best;
  for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << k); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) < c.dim()) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint32_t{1} << i)) idx.push_back(i);
    if (best && !(idx < *best)) continue;
    if (span_rank(c, idx) != c.dim()) continue;
    if (c.sub_cone(idx).classify(m) == Membership::RelativeInterior) best = std::move(idx);
  }
  if (best) {
    t.variant = Trichotomy::Variant::FullDimSubcone;
    t.tau = std::move(*best);
    return t;
  }

  t.variant = Trichotomy::Variant::SpanningPair;
  std::vector<std::size_t> tau1 = claim(c, m, 0);
  while (true) {
    std::size_t outside = 0;
    std::size_t base = span_rank(c, tau1);
    while (span_rank(c, merge(tau1, {outside})) == base) ++outside;
    std::vector<std::size_t> tau2 = claim(c, m, outside);
    std::vector<std::size_t> both = merge(tau1, tau2);
    if (span_rank(c, both) == c.dim()) {
      t.tau1 = tau1;
      t.tau2 = tau2;
      return t;
    }
    tau1 = both;
  }
}

Decomposition lift(const Cone& parent, const Cone& child, Decomposition d) {
  for (auto& row : d.coefficients) {
    std::vector<Integer> full(parent.rays().size(), Integer(0));
    for (std::size_t j = 0; j < row.size(); ++j) full[*parent.ray_index(child.rays()[j])] = row[j];
    row = std::move(full);
  }
  return d;
}

Decomposition decompose_simplicial(const Cone& c, std::span<const Integer> m) {
  const auto& rays = c.rays();
  RatMatrix a(c.ambient_dim(), rays.size());
  for (std::size_t j = 0; j < rays.size(); ++j)
    for (std::size_t i = 0; i < c.ambient_dim(); ++i) a(i, j) = Rational(rays[j][i]);
  RatVector coef = solve_rational(a, to_rational(m)).solution;

  Decomposition d;
  d.k0 = Integer(1);
  for (const auto& x : coef) d.k0 = lcm(d.k0, x.den());
  d.total_weight = d.k0;
  for (std::size_t j = 0; j < rays.size(); ++j) {
    Integer k = exact_div(coef[j].num() * d.k0, coef[j].den());
    d.vectors.push_back(scale(k, rays[j]));
    std::vector<Integer> row(rays.size(), Integer(0));
    row[j] = k;
    d.coefficients.push_back(std::move(row));
    d.total_weight += k;
  }
  return d;
}

Decomposition decompose_rec(const Cone& c, std::span<const Integer> m) {
  RatVector mr = to_rational(m);
  Trichotomy t = relative_trichotomy(c, mr);
  switch (t.variant) {
    case Trichotomy::Variant::Simplicial:
      return decompose_simplicial(c, m);
    case Trichotomy::Variant::FullDimSubcone: {
      Cone sub_cone = c.sub_cone(t.tau);
      return lift(c, sub_cone, decompose_rec(sub_cone, m));
    }
    case Trichotomy::Variant::SpanningPair:
      break;
  }

  Cone c1 = c.sub_cone(t.tau1), c2 = c.sub_cone(t.tau2);
  Decomposition d1 = lift(c, c1, decompose_rec(c1, m));
  Decomposition d2 = lift(c, c2, decompose_rec(c2, m));

  Decomposition d;
  d.k0 = d1.k0 + d2.k0;
  d.vectors = d1.vectors;
  d.coefficients = d1.coefficients;
  IntVector w(c.ambient_dim(), Integer(0));
  std::vector<Integer> w_coef(c.rays().size(), Integer(0));
  bool have_leftover = false;
  for (std::size_t i = 0; i < d2.vectors.size(); ++i) {
    d.vectors.push_back(d2.vectors[i]);
    if (d.vectors.size() <= c.dim() && rank(d.vectors, c.ambient_dim()) == d.vectors.size()) {
      d.coefficients.push_back(d2.coefficients[i]);
      continue;
    }
    d.vectors.pop_back();
    w = add(w, d2.vectors[i]);
    w_coef = add(w_coef, d2.coefficients[i]);
    have_leftover = true;
  }
  if (have_leftover) {
    for (std::size_t i = 0; i < d.vectors.size(); ++i) {
      auto trial = d.vectors;
      trial[i] = add(trial[i], w);
      if (rank(trial, c.ambient_dim()) == trial.size()) {
        d.vectors = std::move(trial);
        d.coefficients[i] = add(d.coefficients[i], w_coef);
        break;
      }
    }
  }
  d.total_weight = d.k0;
  for (const auto& row : d.coefficients)
    for (const auto& k : row) d.total_weight += k;
  return d;
}

}  // namespace

std::vector<SubCone> subcones_containing(const Cone& c, std::span<const Rational> m) {
  require_interior(c, m);
  const std::size_t k = c.rays().size();
  if (k > kMaxSubsetRays)
    throw Error(ErrorCode::TooManyRays,
                std::to_string(k) + " rays exceed the subset enumeration limit of " + std::to_string(kMaxSubsetRays));
  std::vector<SubCone> out;
  for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << k); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint32_t{1} << i)) idx.push_back(i);
    Cone sub_cone = c.sub_cone(idx);
    if (sub_cone.classify(m) == Membership::RelativeInterior) out.push_back({std::move(idx), std::move(sub_cone)});
  }
  std::sort(out.begin(), out.end(), [](const SubCone& a, const SubCone& b) { return a.ray_indices < b.ray_indices; });
  return out;
}

Trichotomy trichotomy(const Cone& c, std::span<const Rational> m) {
  if (!c.is_full_dimensional()) throw Error(ErrorCode::NotFullDimensional, "trichotomy needs a full-dimensional cone");
  require_interior(c, m);
  return relative_trichotomy(c, m);
}

Decomposition decompose(const Cone& c, std::span<const Integer> m) {
  require_interior(c, to_rational(m));
  return decompose_rec(c, m);
}

Decomposition decompose(const ToricGerm& g, std::span<const Rational> m) {
  if (m.size() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
  auto c = g.to_lattice(m);
  if (!c) throw Error(ErrorCode::NotInteriorPoint, "point is not in the lattice N");
  return decompose(g.cone(), *c);
}

BlowupReport blowup_report(const ToricGerm& g, const Decomposition& d) {
  const std::size_t n = g.dim();
  if (d.vectors.size() != n || rank(d.vectors, n) != n)
    throw Error(ErrorCode::DependentVectors, "the decomposition vectors do not span the space");

  LatticeBasis orb = orbifold_lattice(g);
  auto L = log_disc_functional(g);
  IntMatrix coarse(n, n), fine(n, n);
  BlowupReport rep{Cone::make(n, d.vectors), {}, {}, Integer(0), Integer(0), Integer(0)};
  for (std::size_t i = 0; i < n; ++i) {
    IntVector c = *express_in_basis(orb, g.to_ambient(d.vectors[i]));
    IntVector p = primitive(c);
    for (std::size_t j = 0; j < n; ++j) {
      coarse(i, j) = c[j];
      fine(i, j) = p[j];
    }
    rep.generators.push_back(combine(orb, p));
    rep.k_values.push_back(L(rep.generators.back()));
  }
  auto order = [](const IntMatrix& m) {
    Integer o(1);
    for (const auto& f : snf(m).factors) o *= f;
    return o;
  };
  rep.group_order = order(fine);
  rep.coarse_order = order(coarse);
  rep.pi1_order = pi1_reg(g).order;
  return rep;
}

}  // namespace toric
