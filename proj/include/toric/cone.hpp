#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toric/matrix.hpp"

namespace toric {

enum class Membership { Outside, Boundary, RelativeInterior };

// A face of a cone, identified by the parent's rays it contains.
struct Face {
  std::vector<std::size_t> ray_indices;  // into the parent's rays(), ascending
  std::vector<IntVector> rays;
  std::size_t dim = 0;
};

// Strongly convex rational polyhedral cone, given by its primitive extremal
// rays. The facet description is computed once at construction by double
// description and never changes, so a Cone can be shared freely.
//
// Cones need not be full-dimensional. Facet normals are expressed in the
// coordinates of span_basis(), a lattice basis of span(cone) ∩ Z^n; for a
// full-dimensional cone that basis is the identity and the facets are
// ordinary dual vectors.
class Cone {
 public:
  // Normalizes generators to primitive vectors, drops duplicates and
  // non-extremal generators (keeping input order of the survivors).
  // Throws Error(EmptyInput | ZeroVector | DimensionMismatch | NotStronglyConvex).
  static Cone make(std::size_t ambient_dim, std::span<const IntVector> generators);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return dim_; }
  bool is_full_dimensional() const noexcept { return dim_ == ambient_dim_; }
  bool is_simplicial() const noexcept { return rays_.size() == dim_; }

  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  const std::vector<IntVector>& facets() const noexcept { return facets_; }
  const IntMatrix& span_basis() const noexcept { return span_basis_; }

  std::optional<std::size_t> ray_index(std::span<const Integer> ray) const;

  // Coordinates with respect to span_basis(), or nullopt when v is outside the span.
  std::optional<RatVector> span_coordinates(std::span<const Rational> v) const;
  // Facet values at v, or nullopt when v is outside the span.
  std::optional<RatVector> facet_values(std::span<const Rational> v) const;

  Membership classify(std::span<const Rational> v) const;
  Membership classify(std::span<const Integer> v) const;

  // The face whose relative interior contains v. Throws Error(NotInCone).
  Face minimal_face(std::span<const Rational> v) const;

  // All functionals nonnegative on the cone. Throws Error(NotFullDimensional),
  // since the dual of a lower-dimensional cone contains a line.
  Cone dual() const;

  // Cone spanned by the given subset of rays.
  Cone sub_cone(std::span<const std::size_t> ray_indices) const;

 private:
  Cone() = default;

  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> rays_in_span_;
  std::vector<IntVector> facets_;
  IntMatrix span_basis_;
};

// Extreme rays of {y in Q^d : a . y >= 0 for every row a}, as primitive
// integer vectors in ascending lexicographic order. The rows must have rank d.
std::vector<IntVector> double_description(std::size_t d, std::span<const IntVector> rows);

// Same ray sets regardless of order.
bool same_rays(const Cone& a, const Cone& b);

}  // namespace toric
