#include "toric/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toric/error.hpp"
#include "toric/io.hpp"
#include "toric/oracle.hpp"

namespace toric {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational option_rational(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("--" + name + ": expected an integer or p/q, got '" + text + "'");
  }
}

RatVector option_point(const std::string& text, std::size_t dim) {
  RatVector p;
  try {
    p = parse_point(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--point: ") + e.what());
  }
  if (p.size() != dim)
    throw UsageError("--point: expected " + std::to_string(dim) + " coordinates, got " + std::to_string(p.size()));
  return p;
}

oracle::Germ oracle_input(const GermDocument& doc) {
  oracle::Germ g;
  g.dim = doc.dim;
  g.rays = doc.rays;
  g.boundary = doc.boundary;
  g.lattice_extra = doc.lattice_extra;
  return g;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of toric klt germs", "toriclab"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  std::string out_path;
  app.add_flag("--pretty", pretty, "Also print an aligned human-readable table");
  app.add_option("--out", out_path, "Write the JSON report to FILE instead of standard output");

  std::string file, bound, low, high, epsilon, delta, point, family_name, spec_path;
  std::int64_t param = 0;
  std::size_t threads = 1;

  auto germ_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", file, "Germ document (JSON)")->required();
    return sub;
  };

  auto* mld_cmd = germ_command("mld", "Minimal log discrepancy and its minimizers");
  mld_cmd->add_option("--bound", bound, "Search bound for the log discrepancy");
  auto* pi1_cmd = germ_command("pi1", "Regional fundamental group");
  auto* window_cmd = germ_command("window", "Interior lattice points with log discrepancy in [low, high)");
  window_cmd->add_option("--low", low)->required();
  window_cmd->add_option("--high", high)->required();
  auto* check_cmd = germ_command("check", "Classify the germ against the boundedness hypotheses");
  check_cmd->add_option("--epsilon", epsilon)->required();
  check_cmd->add_option("--delta", delta)->required();
  auto* tri_cmd = germ_command("trichotomy", "Sub-cone trichotomy at an interior point");
  tri_cmd->add_option("--point", point, "Comma-separated coordinates")->required();
  auto* dec_cmd = germ_command("decompose", "Bounded decomposition of an interior point");
  dec_cmd->add_option("--point", point, "Comma-separated coordinates")->required();
  auto* blow_cmd = germ_command("blowup", "Simplicial sub-cone report (default point: first mld minimizer)");
  blow_cmd->add_option("--point", point, "Comma-separated coordinates");
  auto* fam_cmd = app.add_subcommand("family", "Emit a germ of one of the example families");
  fam_cmd->add_option("--name", family_name, "ex1, ex2, ex3 or ex4")->required();
  fam_cmd->add_option("--param", param)->required();
  auto* scan_cmd = app.add_subcommand("scan", "Aggregate instance checks over a scan specification");
  scan_cmd->add_option("--spec", spec_path, "Scan specification (JSON)")->required();
  scan_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
  auto* oracle_cmd = germ_command("oracle-mld", "Brute-force reference mld (and window)");
  oracle_cmd->add_option("--low", low);
  oracle_cmd->add_option("--high", high);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Json result;
  try {
    auto load_doc = [&] {
      std::string text = read_file(file);
      return parse_germ_document(text);
    };
    auto load = [&] { return to_germ(load_doc()); };

    if (mld_cmd->parsed()) {
      ToricGerm g = load();
      std::optional<Rational> b;
      if (!bound.empty()) b = option_rational("bound", bound);
      result = to_json(mld(g, b));
    } else if (pi1_cmd->parsed()) {
      result = to_json(pi1_reg(load()));
    } else if (window_cmd->parsed()) {
      Rational lo = option_rational("low", low), hi = option_rational("high", high);
      result = to_json(count_window(load(), lo, hi));
    } else if (check_cmd->parsed()) {
      Rational eps = option_rational("epsilon", epsilon), del = option_rational("delta", delta);
      result = to_json(check_instance({load(), eps, del}));
    } else if (tri_cmd->parsed()) {
      ToricGerm g = load();
      RatVector p = option_point(point, g.dim());
      auto c = g.to_lattice(p);
      if (!c) throw Error(ErrorCode::NotInteriorPoint, "point is not in the lattice N");
      result = to_json(g, trichotomy(g.cone(), to_rational(*c)));
    } else if (dec_cmd->parsed()) {
      ToricGerm g = load();
      result = to_json(g, decompose(g, option_point(point, g.dim())));
    } else if (blow_cmd->parsed()) {
      ToricGerm g = load();
      RatVector p = point.empty() ? mld(g).minimizers.front() : option_point(point, g.dim());
      result["point"] = vector_json(p);
      Json report = to_json(blowup_report(g, decompose(g, p)));
      for (auto& [k, v] : report.items()) result[k] = v;
    } else if (fam_cmd->parsed()) {
      result = to_json(to_document(family(parse_family(family_name), param)));
    } else if (scan_cmd->parsed()) {
      ScanSpec spec = parse_scan_spec(read_file(spec_path));
      result = to_json(scan(expand(spec), threads));
    } else if (oracle_cmd->parsed()) {
      if (low.empty() != high.empty()) throw UsageError("--low and --high must be given together");
      GermDocument doc = load_doc();
      ToricGerm g = to_germ(doc);
      log_disc_functional(g);
      std::optional<Rational> lo, hi;
      if (!low.empty()) {
        lo = option_rational("low", low);
        hi = option_rational("high", high);
        if (lo->sign() <= 0 || *hi < *lo) throw Error(ErrorCode::InvalidWindow, "window is invalid");
      }
      oracle::Result r = oracle::brute_force(oracle_input(doc), lo, hi);
      result["mld"] = r.mld.to_string();
      result["minimizers"] = Json::array();
      for (const auto& m : r.minimizers) result["minimizers"].push_back(vector_json(m));
      if (lo) {
        WindowCount w{*lo, *hi, {}};
        for (const auto& p : r.window) w.points.push_back({p.coords, p.value});
        result["window"] = to_json(w);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    err << "invalid germ: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  std::string text = result.dump();
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    f << text << '\n';
  } else {
    out << text << '\n';
  }
  if (pretty) out << pretty_table(result);
  return 0;
}

}  // namespace toric
