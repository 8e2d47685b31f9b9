#pragma once

#include <optional>
#include <vector>

#include "toric/germ.hpp"

namespace toric {

// N_{Z,Delta}: the lattice generated by N and the rescaled rays rho / n_rho,
// in original coordinates.
LatticeBasis orbifold_lattice(const ToricGerm& g);

// The linear function L_Delta with L(rho) = 1 - coeff_rho on every primitive
// ray generator rho of N.
struct LogDiscFunctional {
  RatVector coeffs;          // L(x) = coeffs . x for x in original coordinates
  RatVector lattice_coeffs;  // the same functional in the germ's lattice coordinates

  Rational operator()(std::span<const Rational> ambient) const { return dot<Rational, Rational>(coeffs, ambient); }
  Rational at_lattice(std::span<const Integer> c) const { return dot<Rational, Integer>(lattice_coeffs, c); }
};

// Throws Error(NotQCartier) when no single linear function fits every ray and
// Error(NotFullDimensional) when the rays do not determine it.
LogDiscFunctional log_disc_functional(const ToricGerm& g);

struct MldResult {
  Rational value;
  std::vector<RatVector> minimizers;  // original coordinates, ascending
  Rational search_bound;
};

// Minimum of L over the interior lattice points of the cone. The default
// search bound is L(sum of rays), which is attained by an interior point.
// Throws Error(NoPointBelowBound) when a user bound excludes every point.
MldResult mld(const ToricGerm& g, std::optional<Rational> bound = std::nullopt);

struct WindowPoint {
  RatVector point;  // original coordinates
  Rational value;
};

struct WindowCount {
  Rational low;
  Rational high;
  std::vector<WindowPoint> points;  // ascending by point
  std::size_t count() const noexcept { return points.size(); }
};

// Interior lattice points u with low <= L(u) < high. Throws Error(InvalidWindow)
// unless 0 < low <= high.
WindowCount count_window(const ToricGerm& g, const Rational& low, const Rational& high);

struct FiniteAbelianGroup {
  std::vector<Integer> invariant_factors;  // each > 1, d1 | d2 | ...
  Integer order{1};                        // 0 when free_rank > 0
  std::size_t free_rank = 0;
};

// N_{Z,Delta} / <rays>.
FiniteAbelianGroup pi1_reg(const ToricGerm& g);

// Throws Error(NotInteriorPoint) unless u is an interior point of the cone in N.
Rational log_discrepancy_at(const ToricGerm& g, std::span<const Rational> u);

// Interior points of the germ cone in lattice coordinates with
// low <= L < high (or L <= high when high_inclusive), in ascending order.
std::vector<IntVector> interior_points(const ToricGerm& g, const LogDiscFunctional& L, const Rational& low,
                                       const Rational& high, bool high_inclusive);

}  // namespace toric
