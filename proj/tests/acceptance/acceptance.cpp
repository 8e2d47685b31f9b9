// Acceptance run: one [PASS]/[FAIL] line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "corpus.hpp"
#include "toric/cli.hpp"
#include "toric/error.hpp"
#include "toric/invariants.hpp"
#include "toric/io.hpp"
#include "toric/lab.hpp"
#include "toric/linalg.hpp"
#include "toric/structure.hpp"

using namespace toric;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

// Time limits, in seconds.
constexpr double kEx1PerInstance = 1.0;
constexpr double kEx3PerInstance = 2.0;
constexpr double kOracleSuite = 180.0;
constexpr double kLinalgSuite = 30.0;
constexpr double kGeometrySuite = 120.0;
constexpr double kStructureSuite = 120.0;

constexpr std::size_t kOracleGerms = 210;
constexpr std::size_t kMatrices = 500;
constexpr std::size_t kGeometryGerms = 50;
constexpr int kTransformsPerGerm = 20;
constexpr std::size_t kNonsimplicialGerms = 40;

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failed_) s << ", " << failed_ << " failed";
    for (const auto& n : notes_) s << "; " << n;
    return s.str();
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_, notes_;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string millis(double seconds) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << seconds * 1000 << " ms";
  return s.str();
}

std::string str(const Rational& r) { return r.to_string(); }
std::string str(std::int64_t v) { return std::to_string(v); }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("toriclab-acceptance-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    fs::path p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

struct Run {
  int status;
  std::string out;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = run_command(args, out, err);
  return {status, out.str() + err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Integer> cyclic(std::int64_t n) { return {Integer(n)}; }

void ac1(Checker& c) {
  double worst = 0;
  for (std::int64_t n = 2; n <= 12; ++n) {
    auto start = Clock::now();
    ToricGerm g = family(Family::Ex1, n);
    MldResult m = mld(g);
    FiniteAbelianGroup grp = pi1_reg(g);
    double t = seconds_since(start);
    worst = std::max(worst, t);
    std::string tag = "ex1(" + str(n) + ")";
    c.expect(m.value == Rational(1), tag + ": mld " + str(m.value));
    c.expect(m.minimizers.size() == static_cast<std::size_t>(n - 1),
             tag + ": " + std::to_string(m.minimizers.size()) + " minimizers");
    c.expect(grp.invariant_factors == cyclic(n) && grp.free_rank == 0, tag + ": group is not Z/" + str(n));
    c.expect(t < kEx1PerInstance, tag + ": took " + std::to_string(t) + " s");
  }
  c.note("slowest instance " + millis(worst));
}

void ac2(Checker& c) {
  double worst = 0;
  for (std::int64_t r = 2; r <= 12; ++r) {
    auto start = Clock::now();
    ToricGerm g = family(Family::Ex3, r);
    std::string tag = "ex3(" + str(r) + ")";
    MldResult m = mld(g);
    c.expect(m.value == Rational(1) + Rational(1, r), tag + ": mld " + str(m.value));
    c.expect(m.minimizers == std::vector<RatVector>{testing::rats({1, 1, r - 1})}, tag + ": minimizer");
    c.expect(pi1_reg(g).invariant_factors == cyclic(r), tag + ": group is not Z/" + str(r));
    for (const Rational& delta : {Rational(1, 4), Rational(1, 2)}) {
      std::size_t count = count_window(g, m.value, m.value + delta).count();
      Integer floor_rd = (Rational(r) * delta).floor();
      c.expect(Integer(static_cast<std::int64_t>(count)) >= floor_rd,
               tag + ": window of width " + str(delta) + " holds " + std::to_string(count) + " points");
    }
    for (std::int64_t i = 1; i < r; ++i)
      c.expect(log_discrepancy_at(g, testing::rats({1, 1, i})) == Rational(2) - Rational(i, r),
               tag + ": ladder point " + str(i));
    double t = seconds_since(start);
    worst = std::max(worst, t);
    c.expect(t < kEx3PerInstance, tag + ": took " + std::to_string(t) + " s");
  }
  c.note("slowest instance " + millis(worst));
}

void ac3(Checker& c) {
  for (std::int64_t n = 2; n <= 6; ++n) {
    ToricGerm g = family(Family::Ex4, n);
    std::string tag = "ex4(" + str(n) + ")";
    MldResult m = mld(g);
    c.expect(m.value == Rational(1), tag + ": mld " + str(m.value));
    c.expect(pi1_reg(g).invariant_factors == cyclic(n), tag + ": group is not Z/" + str(n));
    // The open interval (1,2): every point of [1,2) must sit at exactly 1.
    WindowCount w = count_window(g, Rational(1), Rational(2));
    bool empty = std::all_of(w.points.begin(), w.points.end(), [](const WindowPoint& p) { return p.value == Rational(1); });
    c.expect(empty, tag + ": a point has log discrepancy strictly between 1 and 2");
  }
}

void ac4(Checker& c) {
  Json fixture = Json::parse(read_file(TORIC_FIXTURE_DIR "/ex2_mld.json"));
  bool matches_enumerated = true;
  for (std::int64_t n = 2; n <= 12; ++n) {
    ToricGerm g = family(Family::Ex2, n);
    std::string tag = "ex2(" + str(n) + ")";
    c.expect(pi1_reg(g).invariant_factors == cyclic(2 * n), tag + ": group is not Z/" + str(2 * n));
    MldResult m = mld(g);
    oracle::Result o = oracle::brute_force(testing::oracle_germ(g));
    c.expect(m.value == o.mld, tag + ": mld " + str(m.value) + " but oracle " + str(o.mld));
    c.expect(m.minimizers == o.minimizers, tag + ": minimizers differ from the oracle");
    if (m.value != Rational(1, n)) matches_enumerated = false;
  }
  c.note("mld follows " + std::string(matches_enumerated ? fixture["enumerated_mld"] : "neither closed form") +
         ", stated " + fixture["stated_mld"].get<std::string>() + " is a recorded discrepancy");
}

void ac5(Checker& c) {
  auto start = Clock::now();
  TempDir dir;
  auto corpus = testing::sampled_corpus(kOracleGerms, 50000);
  for (auto& g : testing::nonsimplicial_corpus(kNonsimplicialGerms, 51000)) corpus.push_back(std::move(g));
  std::size_t dims[5] = {}, max_rays = 0, window_points = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ToricGerm& g = corpus[i];
    ++dims[g.dim()];
    max_rays = std::max(max_rays, g.cone().rays().size());
    std::string tag = "germ " + std::to_string(i) + " " + g.describe();
    std::string file = dir.write("g" + std::to_string(i) + ".json", render_germ(g));

    Run m = cli({"mld", file});
    c.expect(m.status == 0, tag + ": mld failed: " + m.out);
    if (m.status != 0) continue;
    Json mj = Json::parse(m.out);
    std::string low = mj["mld"].get<std::string>();
    std::string high = (Rational::parse(low) + Rational(1, 2)).to_string();
    Run w = cli({"window", "--low", low, "--high", high, file});
    Run o = cli({"oracle-mld", "--low", low, "--high", high, file});
    c.expect(w.status == 0 && o.status == 0, tag + ": window/oracle failed");
    if (w.status != 0 || o.status != 0) continue;
    Json wj = Json::parse(w.out), oj = Json::parse(o.out);
    c.expect(mj["mld"] == oj["mld"], tag + ": mld " + low + " vs oracle " + oj["mld"].dump());
    c.expect(mj["minimizers"] == oj["minimizers"], tag + ": minimizers differ from the oracle");
    c.expect(wj == oj["window"], tag + ": window differs from the oracle");
    window_points += wj["count"].get<std::size_t>();
  }
  double t = seconds_since(start);
  c.expect(corpus.size() >= 200, "fewer than 200 germs");
  c.expect(t < kOracleSuite, "suite took " + std::to_string(t) + " s");
  c.note(std::to_string(corpus.size()) + " germs (dim 2/3/4: " + std::to_string(dims[2]) + "/" +
         std::to_string(dims[3]) + "/" + std::to_string(dims[4]) + ", up to " + std::to_string(max_rays) +
         " rays), " + std::to_string(window_points) + " window points");
}

bool unimodular(const IntMatrix& u) { return abs(determinant(u)) == Integer(1); }

void ac6(Checker& c) {
  auto start = Clock::now();
  std::mt19937_64 rng(60000);
  std::uniform_int_distribution<int> dim(1, 6), entry(-12, 12);
  for (std::size_t t = 0; t < kMatrices; ++t) {
    IntMatrix a(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = Integer(entry(rng));
    std::string tag = "matrix " + std::to_string(t);

    SnfResult s = snf(a);
    c.expect(unimodular(s.U) && unimodular(s.V), tag + ": SNF transforms not unimodular");
    c.expect(s.U * a * s.V == s.S, tag + ": U*A*V != S");
    bool diagonal = s.factors.size() == s.rank;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        bool on = i == j && i < s.rank;
        if (on ? s.S(i, j) != s.factors[i] : !s.S(i, j).is_zero()) diagonal = false;
      }
    c.expect(diagonal, tag + ": S is not the diagonal of its factors");
    bool chain = true;
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
      if (s.factors[i].sign() <= 0) chain = false;
      if (i + 1 < s.factors.size() && !floor_mod(s.factors[i + 1], s.factors[i]).is_zero()) chain = false;
    }
    c.expect(chain, tag + ": divisibility chain broken");

    HnfResult h = hnf(a);
    c.expect(unimodular(h.U), tag + ": HNF transform not unimodular");
    c.expect(h.U * a == h.H, tag + ": U*A != H");
    bool shape = true;
    std::size_t last = 0;
    bool zero_row = false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::size_t col = 0;
      while (col < a.cols() && h.H(i, col).is_zero()) ++col;
      if (col == a.cols()) {
        zero_row = true;
        continue;
      }
      if (zero_row || (i > 0 && col < last) || h.H(i, col).sign() <= 0) shape = false;
      for (std::size_t r = 0; r < i; ++r)
        if (h.H(r, col).sign() < 0 || h.H(r, col) >= h.H(i, col)) shape = false;
      last = col + 1;
    }
    c.expect(shape, tag + ": H is not in Hermite form");
  }
  double t = seconds_since(start);
  c.expect(t < kLinalgSuite, "suite took " + std::to_string(t) + " s");
  c.note(std::to_string(kMatrices) + " matrices");
}

void ac7(Checker& c) {
  auto start = Clock::now();
  std::mt19937_64 rng(70000);
  auto corpus = testing::sampled_corpus(kGeometryGerms, 71000);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ToricGerm& g = corpus[i];
    std::string tag = "germ " + std::to_string(i) + " " + g.describe();
    const Cone& cone = g.cone();

    RatVector s(g.dim(), Rational(0));
    for (const auto& r : cone.rays()) s = add(s, to_rational(r));
    c.expect(cone.classify(s) == Membership::RelativeInterior, tag + ": ray sum not interior");
    for (const auto& r : cone.rays()) c.expect(cone.classify(r) == Membership::Boundary, tag + ": ray not on boundary");
    c.expect(cone.classify(scale(Rational(-1), s)) == Membership::Outside, tag + ": negated ray sum inside");
    Cone dual = cone.dual();
    c.expect(same_rays(dual.dual(), cone), tag + ": dual is not an involution");
    for (const auto& f : dual.rays())
      c.expect(dual.classify(f) == Membership::Boundary, tag + ": facet normal not on the dual boundary");

    MldResult m = mld(g);
    Rational hi = m.value + Rational(1, 2);
    std::size_t wc = count_window(g, m.value, hi).count();
    auto factors = pi1_reg(g).invariant_factors;
    for (int t = 0; t < kTransformsPerGerm; ++t) {
      IntMatrix u = testing::random_unimodular(g.dim(), rng);
      ToricGerm h = testing::transform(g, u);
      std::string ttag = tag + " transform " + std::to_string(t);
      MldResult mh = mld(h);
      c.expect(mh.value == m.value, ttag + ": mld changed");
      std::vector<RatVector> moved;
      for (const auto& p : m.minimizers) moved.push_back(testing::transform(p, u));
      std::sort(moved.begin(), moved.end());
      c.expect(mh.minimizers == moved, ttag + ": minimizers do not move with the transform");
      c.expect(count_window(h, m.value, hi).count() == wc, ttag + ": window count changed");
      c.expect(pi1_reg(h).invariant_factors == factors, ttag + ": group changed");
      c.expect(h.cone().classify(to_rational(*to_integer(testing::transform(s, u)))) == Membership::RelativeInterior,
               ttag + ": membership not preserved");
    }
  }
  double t = seconds_since(start);
  c.expect(t < kGeometrySuite, "suite took " + std::to_string(t) + " s");
  c.note(std::to_string(corpus.size()) + " germs x " + std::to_string(kTransformsPerGerm) + " transforms");
}

void ac8(Checker& c) {
  auto start = Clock::now();
  auto corpus = testing::nonsimplicial_corpus(kNonsimplicialGerms, 80000);
  for (const auto& g : testing::sampled_corpus(kOracleGerms, 50000))
    if (!g.cone().is_simplicial()) corpus.push_back(g);
  std::size_t points = 0, variants[3] = {};
  Integer max_weight(0);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ToricGerm& g = corpus[i];
    std::string tag = "germ " + std::to_string(i) + " " + g.describe();
    MldResult res = mld(g);
    Integer group = pi1_reg(g).order;
    for (const auto& m : res.minimizers) {
      ++points;
      std::string mtag = tag + " at " + format_vector(m);
      IntVector mc = *g.to_lattice(m);
      try {
        Trichotomy t = trichotomy(g.cone(), to_rational(mc));
        ++variants[static_cast<int>(t.variant)];
        std::string why = testing::check_trichotomy(g.cone(), to_rational(mc), t);
        c.expect(why.empty(), mtag + ": trichotomy " + why);
        Decomposition d = decompose(g, m);
        why = testing::check_decomposition(g.cone(), mc, d);
        c.expect(why.empty(), mtag + ": decomposition " + why);
        max_weight = std::max(max_weight, d.total_weight);
        BlowupReport b = blowup_report(g, d);
        c.expect(b.coarse_order >= group, mtag + ": coarse order " + b.coarse_order.to_string() + " below |pi1| " +
                                               group.to_string());
      } catch (const Error& e) {
        c.expect(false, mtag + ": " + e.what());
      }
    }
  }
  double t = seconds_since(start);
  c.expect(t < kStructureSuite, "suite took " + std::to_string(t) + " s");
  c.note(std::to_string(corpus.size()) + " germs, " + std::to_string(points) + " minimizers (variants 1/2/3: " +
         std::to_string(variants[0]) + "/" + std::to_string(variants[1]) + "/" + std::to_string(variants[2]) +
         "), largest total_weight " + max_weight.to_string());
}

void ac9(Checker& c) {
  const std::string spec = TORIC_FIXTURE_DIR "/scan_fixture.json";
  Run first = cli({"scan", "--spec", spec});
  c.expect(first.status == 0, "scan failed: " + first.out);
  if (first.status != 0) return;
  Json report = Json::parse(first.out);
  c.expect(!report["cells"].empty(), "scan produced no cells");
  c.expect(cli({"scan", "--spec", spec}).out == first.out, "second run differs");
  for (const char* threads : {"1", "2", "4", "8"})
    c.expect(cli({"scan", "--spec", spec, "--threads", threads}).out == first.out,
             std::string("report differs with ") + threads + " threads");
  c.note(std::to_string(report["totals"]["instances"].get<std::size_t>()) + " instances, " +
         std::to_string(report["cells"].size()) + " cells, " + std::to_string(first.out.size()) + " bytes");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"AC1 first family n=2..12: mld 1, n-1 minimizers, group Z/n", ac1},
      {"AC2 third family r=2..12: mld 1+1/r, unique minimizer, group Z/r, windows, ladder", ac2},
      {"AC3 fourth family n=2..6: mld 1, group Z/n, nothing in (1,2)", ac3},
      {"AC4 second family n=2..12: group Z/2n, mld equals the oracle", ac4},
      {"AC5 mld and window equal the brute-force oracle", ac5},
      {"AC6 SNF/HNF invariants on random integer matrices", ac6},
      {"AC7 duality, membership and GL(n,Z) equivariance", ac7},
      {"AC8 trichotomy, decomposition and blowup on non-simplicial germs", ac8},
      {"AC9 scan report is byte-identical across runs and thread counts", ac9},
  };
  bool all = true;
  for (const auto& [name, body] : criteria) {
    Checker c;
    auto start = Clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("unexpected exception: ") + e.what());
    }
    double t = seconds_since(start);
    all = all && c.ok();
    std::cout << (c.ok() ? "[PASS] " : "[FAIL] ") << name << " (" << c.summary() << "; "
              << static_cast<long>(t * 1000) << " ms)\n";
    for (const auto& f : c.failures()) std::cout << "       " << f << '\n';
    std::cout.flush();
  }
  return all ? 0 : 1;
}
