#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "toric/error.hpp"
#include "toric/invariants.hpp"
#include "toric/io.hpp"
#include "toric/lab.hpp"

using namespace toric;
using toric::testing::ints;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Parse;
}

const Rational kHalf(1, 2);

std::vector<ConjectureInstance> grid(const std::vector<ToricGerm>& germs, Rational eps, Rational delta) {
  std::vector<ConjectureInstance> out;
  for (const auto& g : germs) out.push_back({g, eps, delta});
  return out;
}

}  // namespace

TEST_CASE("check_instance examples") {
  InstanceResult a = check_instance({family(Family::Ex1, 5), kHalf, kHalf});
  CHECK(a.classification == Classification::Satisfies);
  CHECK(*a.mld_value == Rational(1));
  CHECK(a.hypothesis_mld_ok);
  CHECK(a.window_count == 4);
  CHECK(a.pi1_order == Integer(5));

  InstanceResult b = check_instance({family(Family::Ex2, 8), kHalf, kHalf});
  CHECK(b.classification == Classification::ViolatesMld);
  CHECK(*b.mld_value == Rational(1, 8));
  CHECK_FALSE(b.hypothesis_mld_ok);

  ToricGerm orth = ToricGerm::make(2, {ints({1, 0}), ints({0, 1})});
  InstanceResult c = check_instance({orth, kHalf, kHalf});
  CHECK(c.classification == Classification::Satisfies);
  CHECK(*c.mld_value == Rational(2));
  CHECK(c.window_count == 1);
  CHECK(c.pi1_order == Integer(1));

  ToricGerm flat = ToricGerm::make(3, {ints({1, 0, 0}), ints({0, 1, 0})});
  InstanceResult d = check_instance({flat, kHalf, kHalf});
  CHECK(d.classification == Classification::Degenerate);
  CHECK_FALSE(d.mld_value.has_value());
  CHECK_FALSE(d.diagnostic.empty());

  ToricGerm nq = ToricGerm::make(3, {ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1}), ints({1, 1, -1})},
                                 {Rational(1, 2), Rational(0), Rational(0), Rational(0)});
  CHECK(check_instance({nq, kHalf, kHalf}).classification == Classification::Degenerate);

  CHECK(code_of([&] { check_instance({orth, Rational(0), kHalf}); }) == ErrorCode::BadParam);
  CHECK(code_of([&] { check_instance({orth, kHalf, Rational(1)}); }) == ErrorCode::BadParam);
  CHECK(code_of([&] { check_instance({orth, kHalf, Rational(0)}); }) == ErrorCode::BadParam);
}

TEST_CASE("the second family violates the mld hypothesis exactly when epsilon reaches 1/n") {
  for (std::int64_t n = 2; n <= 12; ++n) {
    ToricGerm g = family(Family::Ex2, n);
    InstanceResult below = check_instance({g, Rational(1, 2 * n), kHalf});
    CHECK(below.classification == Classification::Satisfies);
    CHECK(below.pi1_order == Integer(2 * n));
    CHECK(check_instance({g, Rational(1, n), kHalf}).classification == Classification::ViolatesMld);
  }
}

TEST_CASE("family constructors") {
  CHECK(family(Family::Ex1, 3).ambient_rays() ==
        std::vector<RatVector>{RatVector{Rational(0), Rational(1)}, RatVector{Rational(3), Rational(1)}});
  CHECK(family(Family::Ex3, 4).dim() == 3);
  ToricGerm e4 = family(Family::Ex4, 3);
  CHECK(e4.dim() == 3);
  CHECK(e4.lattice().covolume() == Rational(1, 3));
  CHECK(parse_family("ex2") == Family::Ex2);
  CHECK(code_of([] { parse_family("ex5"); }) == ErrorCode::BadParam);
  CHECK(code_of([] { family(Family::Ex1, 1); }) == ErrorCode::BadParam);
  CHECK(code_of([] { family(Family::Ex4, 9); }) == ErrorCode::BadParam);
}

TEST_CASE("sampler is deterministic and produces valid germs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::size_t n = 2 + seed % 3;
    std::size_t max_rays = n + seed % 3;
    ToricGerm a = sample_random(n, max_rays, 2, seed);
    ToricGerm b = sample_random(n, max_rays, 2, seed);
    CHECK(a.describe() == b.describe());
    CHECK(a.dim() == n);
    CHECK(a.cone().is_full_dimensional());
    CHECK(a.cone().rays().size() <= max_rays);
    CHECK_NOTHROW(log_disc_functional(a));
    for (const auto& r : to_document(a).rays)
      for (const auto& x : r) CHECK(abs(x) <= Integer(2));
    for (const auto& c : a.boundary())
      CHECK((c == Rational(0) || c == Rational(1, 2) || c == Rational(2, 3) || c == Rational(3, 4)));
  }
  CHECK(sample_random(3, 5, 2, 1).describe() != sample_random(3, 5, 2, 2).describe());
}

TEST_CASE("planar samplers with unit coordinates have small fundamental group") {
  // Two rays with entries in {-1,0,1} span a sublattice of index |det| <= 2,
  // which is the group order when the boundary vanishes.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    ToricGerm g = sample_random(2, 2, 1, seed);
    auto rays = to_document(g).rays;
    REQUIRE(rays.size() == 2);
    Integer det = rays[0][0] * rays[1][1] - rays[0][1] * rays[1][0];
    CHECK(abs(det) <= Integer(2));
    bool plain = std::all_of(g.boundary().begin(), g.boundary().end(), [](const Rational& c) { return c.is_zero(); });
    if (plain) CHECK(pi1_reg(g).order == abs(det));
  }
}

TEST_CASE("sampler parameter checks") {
  CHECK(code_of([] { sample_random(1, 3, 2, 0); }) == ErrorCode::BadParam);
  CHECK(code_of([] { sample_random(3, 2, 2, 0); }) == ErrorCode::BadParam);
  CHECK(code_of([] { sample_random(3, 4, 0, 0); }) == ErrorCode::BadParam);
}

TEST_CASE("scan over the first family") {
  std::vector<ToricGerm> germs;
  for (std::int64_t n = 2; n <= 6; ++n) germs.push_back(family(Family::Ex1, n));
  ScanReport r = scan(grid(germs, kHalf, kHalf));
  CHECK(r.totals.instances == 5);
  CHECK(r.totals.satisfies == 5);
  REQUIRE(r.cells.size() == 5);
  for (std::int64_t n = 2; n <= 6; ++n) {
    CellKey key{2, static_cast<std::size_t>(n - 1), kHalf, kHalf};
    REQUIRE(r.cells.count(key) == 1);
    CHECK(r.cells.at(key).instances == 1);
    CHECK(r.cells.at(key).max_pi1 == Integer(n));
    CHECK(r.cells.at(key).witness == family(Family::Ex1, n).describe());
  }
}

TEST_CASE("scan over the fourth family and edge cases") {
  std::vector<ToricGerm> germs;
  for (std::int64_t p = 2; p <= 4; ++p) germs.push_back(family(Family::Ex4, p));
  ScanReport r = scan(grid(germs, kHalf, kHalf));
  for (std::int64_t p = 2; p <= 4; ++p) {
    CellKey key{static_cast<std::size_t>(p), 1, kHalf, kHalf};
    REQUIRE(r.cells.count(key) == 1);
    CHECK(r.cells.at(key).max_pi1 == Integer(p));
  }

  ScanReport empty = scan({});
  CHECK(empty.cells.empty());
  CHECK(empty.totals.instances == 0);

  std::vector<ToricGerm> ex2{family(Family::Ex2, 3), family(Family::Ex2, 4)};
  ScanReport v = scan(grid(ex2, kHalf, kHalf));
  CHECK(v.cells.empty());
  CHECK(v.totals.violates_mld == 2);
}

TEST_CASE("scan witness is the smallest description among maximisers") {
  // Both orthant presentations have trivial group and land in one cell.
  ToricGerm a = ToricGerm::make(2, {ints({1, 0}), ints({0, 1})});
  ToricGerm b = ToricGerm::make(2, {ints({1, 0}), ints({1, 1})});
  ScanReport r = scan(grid({a, b}, kHalf, kHalf));
  REQUIRE(r.cells.size() == 1);
  const CellStats& s = r.cells.begin()->second;
  CHECK(s.instances == 2);
  CHECK(s.witness == std::min(a.describe(), b.describe()));
}

TEST_CASE("scan reports do not depend on order or thread count") {
  ScanSpec spec;
  spec.families = {{Family::Ex1, 2, 6}, {Family::Ex3, 2, 5}, {Family::Ex4, 2, 3}};
  spec.sampler = SamplerSpec{3, 5, 2, 20, 99};
  spec.grid = {{kHalf, kHalf}, {Rational(1, 3), Rational(1, 4)}};
  auto instances = expand(spec);
  std::string base = to_json(scan(instances, 1)).dump();
  CHECK(to_json(scan(instances, 4)).dump() == base);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 3; ++t) {
    std::shuffle(instances.begin(), instances.end(), rng);
    CHECK(to_json(scan(instances, 1 + t)).dump() == base);
  }
}

TEST_CASE("expand pairs every germ with every grid point") {
  ScanSpec spec;
  spec.families = {{Family::Ex1, 2, 4}};
  spec.sampler = SamplerSpec{2, 3, 2, 2, 7};
  spec.grid = {{kHalf, kHalf}, {Rational(1, 3), Rational(1, 3)}};
  auto inst = expand(spec);
  REQUIRE(inst.size() == 10);
  CHECK(inst[0].germ.describe() == family(Family::Ex1, 2).describe());
  CHECK(inst[1].germ.describe() == family(Family::Ex1, 2).describe());
  CHECK(inst[1].epsilon == Rational(1, 3));
  CHECK(inst[6].germ.describe() == sample_random(2, 3, 2, 7).describe());
  CHECK(inst[8].germ.describe() == sample_random(2, 3, 2, 8).describe());

  spec.families = {{Family::Ex1, 4, 3}};
  CHECK(code_of([&] { expand(spec); }) == ErrorCode::BadParam);
}
