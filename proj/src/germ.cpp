#include "toric/germ.hpp"

#include "toric/error.hpp"

namespace toric {

Integer multiplicity(const Rational& coeff) {
  if (coeff.sign() < 0 || coeff >= Rational(1))
    throw Error(ErrorCode::CoefficientOutOfRange, "boundary coefficient " + coeff.to_string() + " is outside [0, 1)");
  return (Rational(1) / (Rational(1) - coeff)).floor();
}

ToricGerm ToricGerm::make(std::size_t dim, const std::vector<IntVector>& rays, std::vector<Rational> boundary,
                          std::vector<RatVector> lattice_extra) {
  if (dim == 0) throw Error(ErrorCode::InvalidGerm, "dimension must be positive");
  if (rays.empty()) throw Error(ErrorCode::EmptyInput, "a germ needs at least one ray");
  if (boundary.empty()) boundary.assign(rays.size(), Rational(0));
  if (boundary.size() != rays.size())
    throw Error(ErrorCode::InvalidGerm, "expected " + std::to_string(rays.size()) + " boundary coefficients, got " +
                                            std::to_string(boundary.size()));
  for (const auto& c : boundary) multiplicity(c);

  LatticeBasis lattice = lattice_from_generators(dim, lattice_extra);
  std::vector<IntVector> lattice_rays;
  for (const auto& r : rays) {
    if (r.size() != dim) throw Error(ErrorCode::DimensionMismatch, "ray length does not match dimension");
    lattice_rays.push_back(*express_in_basis(lattice, to_rational(r)));
  }
  Cone cone = Cone::make(dim, lattice_rays);
  if (cone.rays().size() != rays.size())
    throw Error(ErrorCode::InvalidGerm, "rays must be distinct extremal rays of the cone they span");
  return ToricGerm(std::move(cone), std::move(lattice), std::move(boundary), std::move(lattice_extra));
}

RatVector ToricGerm::to_ambient(std::span<const Rational> lattice_coords) const {
  RatMatrix b = lattice_.basis();
  RatVector out(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out[j] += lattice_coords[i] * b(i, j);
  return out;
}

std::vector<RatVector> ToricGerm::ambient_rays() const {
  std::vector<RatVector> out;
  for (const auto& r : cone_.rays()) out.push_back(to_ambient(r));
  return out;
}

std::vector<Integer> ToricGerm::multiplicities() const {
  std::vector<Integer> out;
  for (const auto& c : boundary_) out.push_back(multiplicity(c));
  return out;
}

std::string format_vector(std::span<const Rational> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].is_integer() ? v[i].to_string() : "\"" + v[i].to_string() + "\"";
  }
  return s + "]";
}

std::string ToricGerm::describe() const {
  // Rays are rendered as primitive integer vectors of Z^n along the same ray,
  // which is the form germ documents use.
  std::string s = "{\"dim\":" + std::to_string(dim()) + ",\"rays\":[";
  auto rays = ambient_rays();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    Integer den(1);
    for (const auto& x : rays[i]) den = lcm(den, x.den());
    IntVector scaled;
    for (const auto& x : rays[i]) scaled.push_back(exact_div(x.num() * den, x.den()));
    if (i) s += ",";
    s += format_vector(to_rational(primitive(scaled)));
  }
  s += "],\"boundary\":[";
  for (std::size_t i = 0; i < boundary_.size(); ++i) {
    if (i) s += ",";
    s += "\"" + boundary_[i].to_string() + "\"";
  }
  s += "]";
  if (!lattice_.is_standard()) {
    s += ",\"lattice_extra\":[";
    for (std::size_t i = 0; i < dim(); ++i) {
      if (i) s += ",";
      RatVector row = lattice_.row(i);
      s += "[";
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) s += ",";
        s += "\"" + row[j].to_string() + "\"";
      }
      s += "]";
    }
    s += "]";
  }
  return s + "}";
}

}  // namespace toric
