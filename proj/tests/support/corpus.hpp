#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "toric/germ.hpp"
#include "toric/oracle.hpp"
#include "toric/structure.hpp"

namespace toric::testing {

// Random element of GL_n(Z) built from a few elementary operations, so entries stay small.
IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 0);

// The germ with every vector x replaced by x * u (rays, extra lattice
// generators); boundary order is kept.
ToricGerm transform(const ToricGerm& g, const IntMatrix& u);
RatVector transform(std::span<const Rational> x, const IntMatrix& u);

// Cone over a random lattice polytope at height 1, mixed by a unimodular map.
// Non-simplicial in dim >= 3 most of the time; Q-Cartier for any boundary
// that is constant across the rays.
ToricGerm gorenstein_germ(std::size_t n, std::int64_t box, const Rational& coeff, std::mt19937_64& rng);

// Germs from the library sampler: n cycles through 2..4, up to 8 rays.
std::vector<ToricGerm> sampled_corpus(std::size_t count, std::uint64_t seed);
// Non-simplicial germs of dims 3..4, half of them with boundary 1/2 everywhere.
std::vector<ToricGerm> nonsimplicial_corpus(std::size_t count, std::uint64_t seed);

oracle::Germ oracle_germ(const ToricGerm& g);

// Exact test m in relint(cone(rays)) that does not use the Cone class: some
// independent subset S of rays carries m - t * (sum of rays) with nonnegative
// coefficients for all small t > 0.
bool in_relint(const std::vector<IntVector>& rays, std::span<const Rational> m);
// m is a nonnegative combination of some independent subset of rays.
bool in_cone(const std::vector<IntVector>& rays, std::span<const Rational> m);

std::size_t row_rank(std::vector<RatVector> rows);

// Independent re-check of a trichotomy answer; empty string when valid.
std::string check_trichotomy(const Cone& c, std::span<const Rational> m, const Trichotomy& t);
// Integer identities of a decomposition; empty string when valid.
std::string check_decomposition(const Cone& c, std::span<const Integer> m, const Decomposition& d);

IntVector ints(std::initializer_list<std::int64_t> v);
RatVector rats(std::initializer_list<std::int64_t> v);

}  // namespace toric::testing
