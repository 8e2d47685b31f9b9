#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/germ.hpp"

namespace toric {

struct ConjectureInstance {
  ToricGerm germ;
  Rational epsilon;
  Rational delta;
};

enum class Classification { Satisfies, ViolatesMld, Degenerate };
std::string_view to_string(Classification c);

struct InstanceResult {
  std::optional<Rational> mld_value;  // absent for degenerate germs
  bool hypothesis_mld_ok = false;     // mld > epsilon
  std::size_t window_count = 0;       // points with L in [mld, mld + delta)
  Integer pi1_order;
  Classification classification = Classification::Degenerate;
  std::string diagnostic;  // why a germ is degenerate
};

// Throws Error(BadParam) unless epsilon > 0 and 0 < delta < 1. Germs whose
// log discrepancy function does not exist are classified Degenerate.
InstanceResult check_instance(const ConjectureInstance& inst);

enum class Family { Ex1, Ex2, Ex3, Ex4 };
std::string_view to_string(Family f);
// "ex1" .. "ex4"; throws Error(BadParam).
Family parse_family(std::string_view name);

// ex1: <(0,1),(p,1)>; ex2: <(-1,p),(1,p)>; ex3: <e1,e2,(1,1,p)>; ex4: the
// p-dimensional orthant over Z^p + Z(1/p,...,1/p). All with zero boundary.
// Throws Error(BadParam) unless p >= 2 (and p <= 8 for ex4).
ToricGerm family(Family f, std::int64_t param);

// Deterministic random full-dimensional Q-Cartier germ with at most max_rays
// rays, coordinates in [-coord_bound, coord_bound]. Boundary is zero or drawn
// from {0, 1/2, 2/3, 3/4}. Throws Error(BadParam | SamplingExhausted).
ToricGerm sample_random(std::size_t n, std::size_t max_rays, std::int64_t coord_bound, std::uint64_t seed);

struct CellKey {
  std::size_t n = 0;
  std::size_t window_count = 0;
  Rational epsilon;
  Rational delta;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellStats {
  std::size_t instances = 0;
  Integer max_pi1{0};
  std::string witness;  // smallest describe() among germs attaining max_pi1
};

struct ScanTotals {
  std::size_t instances = 0;
  std::size_t satisfies = 0;
  std::size_t violates_mld = 0;
  std::size_t degenerate = 0;
};

// Only Satisfies instances populate cells; the totals count everything.
struct ScanReport {
  std::map<CellKey, CellStats> cells;
  ScanTotals totals;
};

// The report does not depend on `threads` or on instance order.
ScanReport scan(const std::vector<ConjectureInstance>& instances, std::size_t threads = 1);

struct FamilyRange {
  Family family;
  std::int64_t lo;
  std::int64_t hi;
};

struct SamplerSpec {
  std::size_t n;
  std::size_t max_rays;
  std::int64_t coord_bound;
  std::size_t count;
  std::uint64_t seed;  // instance i uses seed + i
};

struct GridPoint {
  Rational epsilon;
  Rational delta;
};

struct ScanSpec {
  std::vector<FamilyRange> families;
  std::optional<SamplerSpec> sampler;
  std::vector<GridPoint> grid;
};

// Every germ listed by a ScanSpec paired with every grid point, germ-major.
std::vector<ConjectureInstance> expand(const ScanSpec& spec);

}  // namespace toric
