#pragma once

#include <optional>
#include <vector>

#include "toric/integer.hpp"
#include "toric/rational.hpp"

// Brute-force reference computations used to cross-check the main library.
// Nothing here touches the cone, lattice or enumeration code of the library:
// only the exact number types are shared.
namespace toric::oracle {

struct Germ {
  std::size_t dim = 0;
  std::vector<std::vector<Integer>> rays;  // integer vectors, original coordinates
  std::vector<Rational> boundary;          // empty means zero
  std::vector<std::vector<Rational>> lattice_extra;
};

struct Point {
  std::vector<Rational> coords;
  Rational value;
};

struct Result {
  Rational mld;
  std::vector<std::vector<Rational>> minimizers;  // ascending
  std::vector<Point> window;                      // ascending; filled when a window was requested
};

// Enumerates every lattice point of the integer bounding box of
// cone ∩ {L <= bound} and filters by exact membership. The bound defaults to
// L(sum of rays). The germ must be valid and Q-Cartier.
Result brute_force(const Germ& g, std::optional<Rational> low = std::nullopt,
                   std::optional<Rational> high = std::nullopt);

// Normals h with h . rho >= 0 on every ray, one per supporting hyperplane
// through n - 1 independent rays (possibly repeated). Full-dimensional cones only.
std::vector<std::vector<Integer>> supporting_normals(std::size_t dim, const std::vector<std::vector<Integer>>& rays);

}  // namespace toric::oracle
