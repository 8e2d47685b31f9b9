#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/cone.hpp"
#include "toric/linalg.hpp"

namespace toric {

// n_rho: the largest positive integer with 1 - 1/n_rho <= coeff, i.e.
// floor(1 / (1 - coeff)). Throws Error(CoefficientOutOfRange) unless 0 <= coeff < 1.
Integer multiplicity(const Rational& coeff);

// A toric pair germ (X(sigma), Delta; x): a cone, the ambient lattice N, and one
// boundary coefficient per ray.
//
// N may strictly contain Z^n. The cone is stored in the coordinates of a basis
// of N (so N becomes Z^n and rays are primitive integer vectors there);
// to_ambient/to_lattice translate between those coordinates and the
// original ones.
class ToricGerm {
 public:
  // `rays` are integer vectors in the original coordinates; each is replaced by
  // the primitive generator of its ray in N. Every ray must be extremal and
  // distinct. `boundary` defaults to all zeros; `lattice_extra` lists
  // generators of N beyond Z^n.
  static ToricGerm make(std::size_t dim, const std::vector<IntVector>& rays, std::vector<Rational> boundary = {},
                        std::vector<RatVector> lattice_extra = {});

  std::size_t dim() const noexcept { return cone_.ambient_dim(); }
  const Cone& cone() const noexcept { return cone_; }
  const LatticeBasis& lattice() const noexcept { return lattice_; }
  const std::vector<Rational>& boundary() const noexcept { return boundary_; }
  const std::vector<RatVector>& lattice_extra() const noexcept { return lattice_extra_; }

  RatVector to_ambient(std::span<const Integer> lattice_coords) const { return combine(lattice_, lattice_coords); }
  RatVector to_ambient(std::span<const Rational> lattice_coords) const;
  std::optional<IntVector> to_lattice(std::span<const Rational> ambient) const {
    return express_in_basis(lattice_, ambient);
  }

  // Primitive generators in N of the rays, in original coordinates.
  std::vector<RatVector> ambient_rays() const;
  std::vector<Integer> multiplicities() const;

  // Compact canonical text, stable across runs; used as a scan witness.
  std::string describe() const;

 private:
  ToricGerm(Cone cone, LatticeBasis lattice, std::vector<Rational> boundary, std::vector<RatVector> extra)
      : cone_(std::move(cone)), lattice_(std::move(lattice)), boundary_(std::move(boundary)),
        lattice_extra_(std::move(extra)) {}

  Cone cone_;
  LatticeBasis lattice_;
  std::vector<Rational> boundary_;
  std::vector<RatVector> lattice_extra_;
};

// Text for a coordinate vector: integers bare, fractions as p/q.
std::string format_vector(std::span<const Rational> v);

}  // namespace toric
