#include "toric/cone.hpp"

#include <algorithm>

#include "toric/error.hpp"
#include "toric/linalg.hpp"

namespace toric {

std::vector<IntVector> double_description(std::size_t d, std::span<const IntVector> rows) {
  // Start from d independent constraints: their cone is simplicial and its
  // extreme rays are the columns of the inverse constraint matrix.
  std::vector<std::size_t> start;
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < rows.size() && chosen.size() < d; ++i) {
    chosen.push_back(rows[i]);
    if (rank(chosen, d) == chosen.size()) {
      start.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (chosen.size() < d) throw Error(ErrorCode::NotFullRank, "double description needs constraints of full rank");

  auto inv = inverse(to_rational(IntMatrix::from_rows(chosen)));
  std::vector<IntVector> rays;
  for (std::size_t j = 0; j < d; ++j) {
    RatVector col = inv->col_vector(j);
    Integer den(1);
    for (const auto& x : col) den = lcm(den, x.den());
    IntVector ray(d);
    for (std::size_t k = 0; k < d; ++k) ray[k] = exact_div(col[k].num() * den, col[k].den());
    rays.push_back(primitive(ray));
  }

  std::vector<IntVector> processed(chosen);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (std::find(start.begin(), start.end(), i) != start.end()) continue;
    const IntVector& a = rows[i];
    std::vector<Integer> vals;
    vals.reserve(rays.size());
    bool any_negative = false;
    for (const auto& r : rays) {
      vals.push_back(dot(a, r));
      if (vals.back().sign() < 0) any_negative = true;
    }
    if (!any_negative) {
      processed.push_back(a);
      continue;
    }

    std::vector<IntVector> next;
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (vals[k].sign() >= 0) next.push_back(rays[k]);
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (vals[p].sign() <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (vals[q].sign() >= 0) continue;
        // Algebraic adjacency: the constraints tight at both rays have rank d - 2.
        std::vector<IntVector> tight;
        for (const auto& row : processed)
          if (dot(row, rays[p]).is_zero() && dot(row, rays[q]).is_zero()) tight.push_back(row);
        if (tight.size() + 2 < d) continue;
        if (rank(tight, d) + 2 != d) continue;
        IntVector combined(d);
        for (std::size_t k = 0; k < d; ++k) combined[k] = vals[p] * rays[q][k] - vals[q] * rays[p][k];
        next.push_back(primitive(combined));
      }
    }
    rays = std::move(next);
    processed.push_back(a);
  }

  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

Cone Cone::make(std::size_t ambient_dim, std::span<const IntVector> generators) {
  if (generators.empty()) throw Error(ErrorCode::EmptyInput, "a cone needs at least one generator");
  std::vector<IntVector> gens;
  for (const auto& g : generators) {
    if (g.size() != ambient_dim)
      throw Error(ErrorCode::DimensionMismatch, "generator length " + std::to_string(g.size()) +
                                                    " does not match ambient dimension " + std::to_string(ambient_dim));
    IntVector p = primitive(g);
    if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
  }

  Cone c;
  c.ambient_dim_ = ambient_dim;
  c.span_basis_ = saturate(gens, ambient_dim);
  c.dim_ = c.span_basis_.rows();

  std::vector<IntVector> coords;
  if (c.dim_ == ambient_dim) {
    coords = gens;
  } else {
    for (const auto& g : gens) {
      auto sc = c.span_coordinates(to_rational(g));
      coords.push_back(*to_integer(*sc));
    }
  }

  c.facets_ = double_description(c.dim_, coords);
  if (c.facets_.empty() || rank(c.facets_, c.dim_) < c.dim_)
    throw Error(ErrorCode::NotStronglyConvex, "the generators span a cone containing a line");

  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<IntVector> tight;
    for (const auto& f : c.facets_)
      if (dot(f, coords[i]).is_zero()) tight.push_back(f);
    if (rank(tight, c.dim_) + 1 == c.dim_) {
      c.rays_.push_back(gens[i]);
      c.rays_in_span_.push_back(coords[i]);
    }
  }
  return c;
}

std::optional<std::size_t> Cone::ray_index(std::span<const Integer> ray) const {
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (std::equal(ray.begin(), ray.end(), rays_[i].begin(), rays_[i].end())) return i;
  return std::nullopt;
}

std::optional<RatVector> Cone::span_coordinates(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
  if (dim_ == ambient_dim_) return RatVector(v.begin(), v.end());
  SolveResult s = solve_rational(to_rational(span_basis_.transpose()), v);
  if (s.kind != SolveResult::Kind::Unique) return std::nullopt;
  return s.solution;
}

std::optional<RatVector> Cone::facet_values(std::span<const Rational> v) const {
  auto coords = span_coordinates(v);
  if (!coords) return std::nullopt;
  RatVector out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) out.push_back(dot(f, *coords));
  return out;
}

Membership Cone::classify(std::span<const Rational> v) const {
  auto vals = facet_values(v);
  if (!vals) return Membership::Outside;
  bool boundary = false;
  for (const auto& x : *vals) {
    if (x.sign() < 0) return Membership::Outside;
    if (x.is_zero()) boundary = true;
  }
  return boundary ? Membership::Boundary : Membership::RelativeInterior;
}

Membership Cone::classify(std::span<const Integer> v) const { return classify(to_rational(v)); }

Face Cone::minimal_face(std::span<const Rational> v) const {
  if (classify(v) == Membership::Outside) throw Error(ErrorCode::NotInCone, "point is not in the cone");
  auto vals = *facet_values(v);
  Face face;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    bool on_face = true;
    for (std::size_t k = 0; k < facets_.size() && on_face; ++k)
      if (vals[k].is_zero() && !dot(facets_[k], rays_in_span_[i]).is_zero()) on_face = false;
    if (on_face) {
      face.ray_indices.push_back(i);
      face.rays.push_back(rays_[i]);
    }
  }
  face.dim = face.rays.empty() ? 0 : rank(face.rays, ambient_dim_);
  return face;
}

Cone Cone::dual() const {
  if (!is_full_dimensional())
    throw Error(ErrorCode::NotFullDimensional, "the dual of a lower-dimensional cone is not strongly convex");
  return make(ambient_dim_, facets_);
}

Cone Cone::sub_cone(std::span<const std::size_t> ray_indices) const {
  std::vector<IntVector> gens;
  for (std::size_t i : ray_indices) gens.push_back(rays_.at(i));
  return make(ambient_dim_, gens);
}

bool same_rays(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.rays().size() != b.rays().size()) return false;
  for (const auto& r : a.rays())
    if (!b.ray_index(r)) return false;
  return true;
}

}  // namespace toric
