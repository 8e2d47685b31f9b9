#pragma once

#include <vector>

#include "toric/cone.hpp"
#include "toric/germ.hpp"

namespace toric {

inline constexpr std::size_t kMaxSubsetRays = 16;

struct SubCone {
  std::vector<std::size_t> ray_indices;  // into the parent's rays(), ascending
  Cone cone;
};

// Cones spanned by proper subsets R of the rays with m in relint(<R>), ordered
// by index set. Throws Error(NotInteriorPoint | TooManyRays).
std::vector<SubCone> subcones_containing(const Cone& c, std::span<const Rational> m);

struct Trichotomy {
  enum class Variant { Simplicial, FullDimSubcone, SpanningPair };
  Variant variant = Variant::Simplicial;
  std::vector<std::size_t> tau;   // FullDimSubcone
  std::vector<std::size_t> tau1;  // SpanningPair
  std::vector<std::size_t> tau2;  // SpanningPair
};

std::string_view to_string(Trichotomy::Variant v);

// One of: the cone is simplicial; a proper ray subset spans a full-dimensional
// cone with m in its interior (smallest index set wins); or two proper ray
// subsets, each with m in its relative interior, together span the space.
// Throws Error(NotFullDimensional | NotInteriorPoint).
Trichotomy trichotomy(const Cone& c, std::span<const Rational> m);

// k0 * m = sum of vectors, vectors[i] = sum_j coefficients[i][j] * rays[j],
// with the vectors linearly independent.
struct Decomposition {
  Integer k0;
  std::vector<IntVector> vectors;
  std::vector<std::vector<Integer>> coefficients;  // [vector][ray of the cone]
  Integer total_weight;                            // k0 + sum of coefficients
};

// m must be a lattice point in the relative interior of c; the result has
// dim(c) vectors. Throws Error(NotInteriorPoint).
Decomposition decompose(const Cone& c, std::span<const Integer> m);

// Same, for a germ: m is in original coordinates and must lie in N; the
// decomposition is expressed in the germ's lattice coordinates.
Decomposition decompose(const ToricGerm& g, std::span<const Rational> m);

struct BlowupReport {
  Cone sigma0;                        // spanned by the vectors, lattice coordinates
  std::vector<RatVector> generators;  // v_{i,0}: primitive in N_{Z,Delta}, original coordinates
  std::vector<Rational> k_values;     // L(v_{i,0})
  Integer group_order;                // |N_{Z,Delta} / <v_{i,0}>|
  Integer coarse_order;               // |N_{Z,Delta} / <v_i>|
  Integer pi1_order;                  // |N_{Z,Delta} / <rays>|, never above coarse_order
};

// `d` is in the germ's lattice coordinates, as returned by decompose(g, m).
// Throws Error(DependentVectors).
BlowupReport blowup_report(const ToricGerm& g, const Decomposition& d);

}  // namespace toric
