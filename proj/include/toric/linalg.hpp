#pragma once

#include <optional>
#include <span>
#include <vector>

#include "toric/matrix.hpp"

namespace toric {

// Divides v by the gcd of its entries. Throws Error(ZeroVector) on v == 0.
IntVector primitive(std::span<const Integer> v);
// gcd of the absolute values of the entries (0 for the zero vector).
Integer content(std::span<const Integer> v);

struct HnfResult {
  IntMatrix H;  // row Hermite form, H = U * A
  IntMatrix U;  // unimodular
};

// Row-style Hermite normal form: H is upper echelon, pivots positive, entries
// above a pivot reduced into [0, pivot), zero rows last.
HnfResult hnf(const IntMatrix& a);

struct SnfResult {
  IntMatrix S;                   // diagonal, S = U * A * V
  IntMatrix U;                   // unimodular
  IntMatrix V;                   // unimodular
  std::vector<Integer> factors;  // nonzero diagonal, d1 | d2 | ...; trailing zeros stripped
  std::size_t rank = 0;
};

SnfResult snf(const IntMatrix& a);

struct SolveResult {
  enum class Kind { Unique, Inconsistent, Underdetermined };
  Kind kind = Kind::Unique;
  // The solution for Unique; a particular solution for Underdetermined.
  RatVector solution;
  // For Inconsistent: y with y * A = 0 and y . b != 0.
  RatVector certificate;
};

// Solves A x = b exactly.
SolveResult solve_rational(const RatMatrix& a, std::span<const Rational> b);

// A full-rank lattice in Q^dim, stored as (integer HNF rows) / denominator.
// Two bases compare equal exactly when they describe the same lattice.
class LatticeBasis {
 public:
  static LatticeBasis standard(std::size_t dim);

  std::size_t dim() const noexcept { return numerators_.rows(); }
  const IntMatrix& numerators() const noexcept { return numerators_; }
  const Integer& denominator() const noexcept { return denominator_; }
  RatMatrix basis() const;
  RatVector row(std::size_t i) const;
  bool is_standard() const;
  // Absolute determinant of the basis; 1/covolume() = [L : Z^n] when L contains Z^n.
  Rational covolume() const;

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

 private:
  friend LatticeBasis lattice_span(std::size_t dim, std::span<const RatVector> generators);
  IntMatrix numerators_;
  Integer denominator_{1};
};

// The lattice generated by `generators`. Throws Error(NotFullRank) when they do
// not span Q^dim.
LatticeBasis lattice_span(std::size_t dim, std::span<const RatVector> generators);
// The lattice generated by Z^dim together with `generators`.
LatticeBasis lattice_from_generators(std::size_t dim, std::span<const RatVector> generators);
// Integer c with c * basis = v, or nullopt when v is not a lattice vector.
std::optional<IntVector> express_in_basis(const LatticeBasis& b, std::span<const Rational> v);
// c * basis.
RatVector combine(const LatticeBasis& b, std::span<const Integer> coords);

// Basis (HNF rows) of span_Q(rows) intersected with Z^n.
IntMatrix saturate(std::span<const IntVector> rows, std::size_t n);

}  // namespace toric
