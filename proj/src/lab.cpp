#include "toric/lab.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "toric/error.hpp"
#include "toric/invariants.hpp"

namespace toric {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Satisfies: return "Satisfies";
    case Classification::ViolatesMld: return "ViolatesMld";
    case Classification::Degenerate: return "Degenerate";
  }
  return "?";
}

InstanceResult check_instance(const ConjectureInstance& inst) {
  if (inst.epsilon.sign() <= 0) throw Error(ErrorCode::BadParam, "epsilon must be positive");
  if (inst.delta.sign() <= 0 || inst.delta >= Rational(1)) throw Error(ErrorCode::BadParam, "delta must lie in (0, 1)");

  InstanceResult res;
  res.pi1_order = pi1_reg(inst.germ).order;
  try {
    MldResult m = mld(inst.germ);
    res.mld_value = m.value;
    res.hypothesis_mld_ok = m.value > inst.epsilon;
    res.window_count = count_window(inst.germ, m.value, m.value + inst.delta).count();
    res.classification = res.hypothesis_mld_ok ? Classification::Satisfies : Classification::ViolatesMld;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotQCartier && e.code() != ErrorCode::NotFullDimensional) throw;
    res.classification = Classification::Degenerate;
    res.diagnostic = e.what();
  }
  return res;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Ex1: return "ex1";
    case Family::Ex2: return "ex2";
    case Family::Ex3: return "ex3";
    case Family::Ex4: return "ex4";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "ex1") return Family::Ex1;
  if (name == "ex2") return Family::Ex2;
  if (name == "ex3") return Family::Ex3;
  if (name == "ex4") return Family::Ex4;
  throw Error(ErrorCode::BadParam, "unknown family '" + std::string(name) + "' (expected ex1, ex2, ex3 or ex4)");
}

ToricGerm family(Family f, std::int64_t p) {
  if (p < 2) throw Error(ErrorCode::BadParam, "family parameter must be at least 2");
  Integer q(p);
  switch (f) {
    case Family::Ex1:
      return ToricGerm::make(2, {{Integer(0), Integer(1)}, {q, Integer(1)}});
    case Family::Ex2:
      return ToricGerm::make(2, {{Integer(-1), q}, {Integer(1), q}});
    case Family::Ex3:
      return ToricGerm::make(3, {{Integer(1), Integer(0), Integer(0)},
                                 {Integer(0), Integer(1), Integer(0)},
                                 {Integer(1), Integer(1), q}});
    case Family::Ex4: {
      if (p > 8) throw Error(ErrorCode::BadParam, "ex4 parameter must be at most 8");
      auto n = static_cast<std::size_t>(p);
      std::vector<IntVector> rays;
      for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, Integer(0));
        e[i] = Integer(1);
        rays.push_back(std::move(e));
      }
      return ToricGerm::make(n, rays, {}, {RatVector(n, Rational(Integer(1), q))});
    }
  }
  throw Error(ErrorCode::BadParam, "unknown family");
}

namespace {

// Uniform draw in [0, bound) by rejection; the standard distributions are not
// reproducible across library implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

constexpr int kSampleBudget = 20000;
constexpr int kBoundaryDraws = 16;

}  // namespace

ToricGerm sample_random(std::size_t n, std::size_t max_rays, std::int64_t coord_bound, std::uint64_t seed) {
  if (n < 2 || n > 5) throw Error(ErrorCode::BadParam, "sampler dimension must lie in 2..5");
  if (max_rays < n) throw Error(ErrorCode::BadParam, "max_rays must be at least the dimension");
  if (coord_bound < 1) throw Error(ErrorCode::BadParam, "coord_bound must be positive");

  static const Rational kCoefficients[] = {Rational(0), Rational(1, 2), Rational(2, 3), Rational(3, 4)};
  std::mt19937_64 rng(seed);
  const auto width = static_cast<std::uint64_t>(2 * coord_bound + 1);

  for (int attempt = 0; attempt < kSampleBudget; ++attempt) {
    std::size_t k = n + draw(rng, max_rays - n + 1);
    std::vector<IntVector> gens;
    while (gens.size() < k) {
      IntVector v(n);
      for (auto& x : v) x = Integer(static_cast<std::int64_t>(draw(rng, width)) - coord_bound);
      if (!is_zero(v)) gens.push_back(std::move(v));
    }
    std::optional<Cone> cone;
    try {
      cone = Cone::make(n, gens);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotStronglyConvex) throw;
      continue;
    }
    if (!cone->is_full_dimensional()) continue;
    const auto& rays = cone->rays();

    auto q_cartier = [&](const std::vector<Rational>& boundary) -> std::optional<ToricGerm> {
      ToricGerm g = ToricGerm::make(n, rays, boundary);
      try {
        log_disc_functional(g);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotQCartier) throw;
        return std::nullopt;
      }
      return g;
    };

    if (draw(rng, 2) == 0) {
      if (auto g = q_cartier({})) return *g;
      continue;
    }
    for (int t = 0; t < kBoundaryDraws; ++t) {
      std::vector<Rational> boundary;
      for (std::size_t i = 0; i < rays.size(); ++i) boundary.push_back(kCoefficients[draw(rng, 4)]);
      if (auto g = q_cartier(boundary)) return *g;
    }
  }
  throw Error(ErrorCode::SamplingExhausted, "no valid germ after " + std::to_string(kSampleBudget) + " attempts");
}

ScanReport scan(const std::vector<ConjectureInstance>& instances, std::size_t threads) {
  std::vector<std::optional<InstanceResult>> results(instances.size());
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < instances.size(); i += stride) results[i] = check_instance(instances[i]);
  };
  threads = std::max<std::size_t>(1, std::min(threads, instances.size()));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t, threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  ScanReport report;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const InstanceResult& r = *results[i];
    ++report.totals.instances;
    switch (r.classification) {
      case Classification::Satisfies: ++report.totals.satisfies; break;
      case Classification::ViolatesMld: ++report.totals.violates_mld; continue;
      case Classification::Degenerate: ++report.totals.degenerate; continue;
    }
    const auto& inst = instances[i];
    CellStats& cell = report.cells[CellKey{inst.germ.dim(), r.window_count, inst.epsilon, inst.delta}];
    ++cell.instances;
    std::string desc = inst.germ.describe();
    if (cell.instances == 1 || r.pi1_order > cell.max_pi1) {
      cell.max_pi1 = r.pi1_order;
      cell.witness = std::move(desc);
    } else if (r.pi1_order == cell.max_pi1 && desc < cell.witness) {
      cell.witness = std::move(desc);
    }
  }
  return report;
}

std::vector<ConjectureInstance> expand(const ScanSpec& spec) {
  std::vector<ToricGerm> germs;
  for (const auto& fr : spec.families) {
    if (fr.lo > fr.hi) throw Error(ErrorCode::BadParam, "empty parameter range for " + std::string(to_string(fr.family)));
    for (std::int64_t p = fr.lo; p <= fr.hi; ++p) germs.push_back(family(fr.family, p));
  }
  if (spec.sampler) {
    const auto& s = *spec.sampler;
    for (std::size_t i = 0; i < s.count; ++i) germs.push_back(sample_random(s.n, s.max_rays, s.coord_bound, s.seed + i));
  }
  std::vector<ConjectureInstance> out;
  for (const auto& g : germs)
    for (const auto& pt : spec.grid) out.push_back({g, pt.epsilon, pt.delta});
  return out;
}

}  // namespace toric
