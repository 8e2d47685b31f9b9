#include "toric/io.hpp"

#include <algorithm>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

std::size_t line_at(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

// Line of the first occurrence of "key" in the text; 0 if absent.
std::size_t line_of(std::string_view text, const std::string& key) {
  auto pos = text.find("\"" + key + "\"");
  return pos == std::string_view::npos ? 0 : line_at(text, pos);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON: " + std::string(e.what()), line_at(text, e.byte == 0 ? 0 : e.byte - 1), "");
  }
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& top_key, const std::string& field, const std::string& msg) const {
    throw ParseError(msg, line_of(text_, top_key), field);
  }

  void only_keys(const Json& obj, std::initializer_list<std::string_view> keys, const std::string& top_key,
                 const std::string& field) const {
    if (!obj.is_object()) fail(top_key, field, "expected an object");
    for (const auto& [k, v] : obj.items())
      if (std::find(keys.begin(), keys.end(), k) == keys.end())
        throw ParseError("unknown key '" + k + "'", line_of(text_, k), field.empty() ? k : field + "/" + k);
  }

  const Json& array(const Json& j, const std::string& top_key, const std::string& field) const {
    if (!j.is_array()) fail(top_key, field, "expected an array");
    return j;
  }

  Integer integer(const Json& j, const std::string& top_key, const std::string& field) const {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
      try {
        return Integer::parse(j.get<std::string>());
      } catch (const std::exception&) {
      }
    }
    fail(top_key, field, "expected an integer, got " + j.dump());
  }

  Rational rational(const Json& j, const std::string& top_key, const std::string& field) const {
    if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer(j, top_key, field));
    if (j.is_string()) {
      try {
        return Rational::parse(j.get<std::string>());
      } catch (const std::exception&) {
      }
    }
    fail(top_key, field, "expected a rational \"p/q\", got " + j.dump());
  }

  std::size_t count(const Json& j, const std::string& top_key, const std::string& field) const {
    Integer v = integer(j, top_key, field);
    if (v.sign() < 0 || !v.fits_int64()) fail(top_key, field, "expected a nonnegative count");
    return static_cast<std::size_t>(v.to_int64());
  }

 private:
  std::string_view text_;
};

std::string path(const std::string& key, std::size_t i) { return key + "/" + std::to_string(i); }
std::string path(const std::string& key, std::size_t i, std::size_t j) { return path(key, i) + "/" + std::to_string(j); }

}  // namespace

GermDocument parse_germ_document(std::string_view text) {
  Json j = parse_json(text);
  Reader rd(text);
  rd.only_keys(j, {"dim", "rays", "boundary", "lattice_extra"}, "", "");

  GermDocument doc;
  if (!j.contains("dim")) throw ParseError("missing required key", 0, "dim");
  doc.dim = rd.count(j["dim"], "dim", "dim");
  if (doc.dim == 0) rd.fail("dim", "dim", "dimension must be positive");

  if (!j.contains("rays")) throw ParseError("missing required key", 0, "rays");
  const Json& rays = rd.array(j["rays"], "rays", "rays");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Json& row = rd.array(rays[i], "rays", path("rays", i));
    if (row.size() != doc.dim)
      rd.fail("rays", path("rays", i), "expected " + std::to_string(doc.dim) + " coordinates, got " +
                                           std::to_string(row.size()));
    IntVector v;
    for (std::size_t k = 0; k < row.size(); ++k) v.push_back(rd.integer(row[k], "rays", path("rays", i, k)));
    doc.rays.push_back(std::move(v));
  }

  if (j.contains("boundary")) {
    const Json& b = rd.array(j["boundary"], "boundary", "boundary");
    for (std::size_t i = 0; i < b.size(); ++i) doc.boundary.push_back(rd.rational(b[i], "boundary", path("boundary", i)));
  }

  if (j.contains("lattice_extra")) {
    const Json& ex = rd.array(j["lattice_extra"], "lattice_extra", "lattice_extra");
    for (std::size_t i = 0; i < ex.size(); ++i) {
      const Json& row = rd.array(ex[i], "lattice_extra", path("lattice_extra", i));
      if (row.size() != doc.dim)
        rd.fail("lattice_extra", path("lattice_extra", i), "expected " + std::to_string(doc.dim) + " coordinates");
      RatVector v;
      for (std::size_t k = 0; k < row.size(); ++k)
        v.push_back(rd.rational(row[k], "lattice_extra", path("lattice_extra", i, k)));
      doc.lattice_extra.push_back(std::move(v));
    }
  }
  return doc;
}

ToricGerm to_germ(const GermDocument& doc) {
  try {
    return ToricGerm::make(doc.dim, doc.rays, doc.boundary, doc.lattice_extra);
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(e.code(), std::string(e.what()).substr(to_string(e.code()).size() + 2));
  }
}

ToricGerm parse_germ(std::string_view text) { return to_germ(parse_germ_document(text)); }

GermDocument to_document(const ToricGerm& g) {
  GermDocument doc;
  doc.dim = g.dim();
  for (const auto& r : g.ambient_rays()) {
    Integer den(1);
    for (const auto& x : r) den = lcm(den, x.den());
    IntVector v;
    for (const auto& x : r) v.push_back(exact_div(x.num() * den, x.den()));
    doc.rays.push_back(primitive(v));
  }
  doc.boundary = g.boundary();
  if (!g.lattice().is_standard())
    for (std::size_t i = 0; i < g.dim(); ++i) doc.lattice_extra.push_back(g.lattice().row(i));
  return doc;
}

Json vector_json(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.is_integer() && x.num().fits_int64())
      a.push_back(x.num().to_int64());
    else
      a.push_back(x.to_string());
  }
  return a;
}

Json vector_json(std::span<const Integer> v) { return vector_json(to_rational(v)); }

Json to_json(const GermDocument& doc) {
  Json j;
  j["dim"] = doc.dim;
  j["rays"] = Json::array();
  for (const auto& r : doc.rays) j["rays"].push_back(vector_json(r));
  j["boundary"] = Json::array();
  for (const auto& c : doc.boundary) j["boundary"].push_back(c.to_string());
  if (!doc.lattice_extra.empty()) {
    j["lattice_extra"] = Json::array();
    for (const auto& row : doc.lattice_extra) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(x.to_string());
      j["lattice_extra"].push_back(r);
    }
  }
  return j;
}

std::string render_germ(const ToricGerm& g) { return to_json(to_document(g)).dump(); }

RatVector parse_point(std::string_view text) {
  RatVector out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    try {
      out.push_back(Rational::parse(part));
    } catch (const std::exception&) {
      throw ParseError("bad coordinate '" + std::string(part) + "'", 0, "point/" + std::to_string(out.size()));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Json to_json(const MldResult& r) {
  Json j;
  j["mld"] = r.value.to_string();
  j["minimizers"] = Json::array();
  for (const auto& m : r.minimizers) j["minimizers"].push_back(vector_json(m));
  return j;
}

Json to_json(const WindowCount& w) {
  Json j;
  j["low"] = w.low.to_string();
  j["high"] = w.high.to_string();
  j["count"] = w.count();
  j["points"] = Json::array();
  for (const auto& p : w.points) {
    Json e;
    e["point"] = vector_json(p.point);
    e["value"] = p.value.to_string();
    j["points"].push_back(e);
  }
  return j;
}

Json to_json(const FiniteAbelianGroup& g) {
  Json j;
  j["invariant_factors"] = vector_json(g.invariant_factors);
  j["order"] = g.free_rank > 0 ? std::string("infinite") : g.order.to_string();
  if (g.free_rank > 0) j["free_rank"] = g.free_rank;
  return j;
}

Json to_json(const InstanceResult& r) {
  Json j;
  j["mld"] = r.mld_value ? Json(r.mld_value->to_string()) : Json(nullptr);
  j["hypothesis_mld_ok"] = r.hypothesis_mld_ok;
  j["window_count"] = r.window_count;
  j["pi1_order"] = r.pi1_order.to_string();
  j["classification"] = std::string(to_string(r.classification));
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

namespace {

Json ray_list(const ToricGerm& g, const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (std::size_t i : idx) a.push_back(vector_json(g.to_ambient(g.cone().rays()[i])));
  return a;
}

}  // namespace

Json to_json(const ToricGerm& g, const Trichotomy& t) {
  Json j;
  j["variant"] = std::string(to_string(t.variant));
  switch (t.variant) {
    case Trichotomy::Variant::Simplicial: break;
    case Trichotomy::Variant::FullDimSubcone: j["tau"] = ray_list(g, t.tau); break;
    case Trichotomy::Variant::SpanningPair:
      j["tau1"] = ray_list(g, t.tau1);
      j["tau2"] = ray_list(g, t.tau2);
      break;
  }
  return j;
}

Json to_json(const ToricGerm& g, const Decomposition& d) {
  Json j;
  j["k0"] = d.k0.to_string();
  j["vectors"] = Json::array();
  for (const auto& v : d.vectors) j["vectors"].push_back(vector_json(g.to_ambient(v)));
  j["coefficients"] = Json::array();
  for (const auto& row : d.coefficients) j["coefficients"].push_back(vector_json(row));
  j["total_weight"] = d.total_weight.to_string();
  return j;
}

Json to_json(const BlowupReport& r) {
  Json j;
  j["sigma0"] = Json::array();
  for (const auto& v : r.generators) j["sigma0"].push_back(vector_json(v));
  j["k_values"] = Json::array();
  for (const auto& k : r.k_values) j["k_values"].push_back(k.to_string());
  j["group_order"] = r.group_order.to_string();
  j["coarse_order"] = r.coarse_order.to_string();
  j["pi1_order"] = r.pi1_order.to_string();
  return j;
}

Json to_json(const ScanReport& r) {
  Json j;
  j["cells"] = Json::array();
  for (const auto& [key, cell] : r.cells) {
    Json c;
    c["n"] = key.n;
    c["window_count"] = key.window_count;
    c["epsilon"] = key.epsilon.to_string();
    c["delta"] = key.delta.to_string();
    c["instances"] = cell.instances;
    c["max_pi1"] = cell.max_pi1.to_string();
    c["witness"] = cell.witness;
    j["cells"].push_back(c);
  }
  j["totals"] = {{"instances", r.totals.instances},
                 {"satisfies", r.totals.satisfies},
                 {"violates_mld", r.totals.violates_mld},
                 {"degenerate", r.totals.degenerate}};
  j["caveat"] =
      "window counts include toric divisorial valuations only; non-toric divisors over the germ are not counted";
  return j;
}

ScanSpec parse_scan_spec(std::string_view text) {
  Json j = parse_json(text);
  Reader rd(text);
  rd.only_keys(j, {"families", "sampler", "grid"}, "", "");
  ScanSpec spec;

  if (j.contains("families")) {
    const Json& fams = rd.array(j["families"], "families", "families");
    for (std::size_t i = 0; i < fams.size(); ++i) {
      std::string f = path("families", i);
      rd.only_keys(fams[i], {"name", "param_range"}, "families", f);
      if (!fams[i].contains("name") || !fams[i]["name"].is_string()) rd.fail("families", f + "/name", "expected a name");
      Family fam;
      try {
        fam = parse_family(fams[i]["name"].get<std::string>());
      } catch (const Error& e) {
        rd.fail("families", f + "/name", e.what());
      }
      if (!fams[i].contains("param_range")) rd.fail("families", f + "/param_range", "missing parameter range");
      const Json& range = rd.array(fams[i]["param_range"], "param_range", f + "/param_range");
      if (range.size() != 2) rd.fail("param_range", f + "/param_range", "expected [lo, hi]");
      Integer lo = rd.integer(range[0], "param_range", f + "/param_range/0");
      Integer hi = rd.integer(range[1], "param_range", f + "/param_range/1");
      if (!lo.fits_int64() || !hi.fits_int64()) rd.fail("param_range", f + "/param_range", "parameter too large");
      spec.families.push_back({fam, lo.to_int64(), hi.to_int64()});
    }
  }

  if (j.contains("sampler")) {
    const Json& s = j["sampler"];
    rd.only_keys(s, {"n", "max_rays", "coord_bound", "count", "seed"}, "sampler", "sampler");
    for (const char* key : {"n", "max_rays", "coord_bound", "count", "seed"})
      if (!s.contains(key)) rd.fail("sampler", std::string("sampler/") + key, "missing required key");
    SamplerSpec sp{};
    sp.n = rd.count(s["n"], "sampler", "sampler/n");
    sp.max_rays = rd.count(s["max_rays"], "sampler", "sampler/max_rays");
    sp.coord_bound = static_cast<std::int64_t>(rd.count(s["coord_bound"], "sampler", "sampler/coord_bound"));
    sp.count = rd.count(s["count"], "sampler", "sampler/count");
    sp.seed = static_cast<std::uint64_t>(rd.count(s["seed"], "sampler", "sampler/seed"));
    spec.sampler = sp;
  }

  if (j.contains("grid")) {
    const Json& grid = rd.array(j["grid"], "grid", "grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      std::string f = path("grid", i);
      rd.only_keys(grid[i], {"epsilon", "delta"}, "grid", f);
      if (!grid[i].contains("epsilon") || !grid[i].contains("delta"))
        rd.fail("grid", f, "grid points need epsilon and delta");
      spec.grid.push_back(
          {rd.rational(grid[i]["epsilon"], "grid", f + "/epsilon"), rd.rational(grid[i]["delta"], "grid", f + "/delta")});
    }
  }
  return spec;
}

namespace {

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void append_table(std::ostringstream& os, const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& [k, v] : rows.front().items()) cols.push_back(k);
  std::vector<std::size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(row.contains(cols[c]) ? cell_text(row[cols[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << "  ";
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << line[c];
      if (c + 1 < line.size()) os << std::string(width[c] - line[c].size() + 2, ' ');
    }
    os << '\n';
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

}  // namespace

std::string pretty_table(const Json& j) {
  std::ostringstream os;
  if (!j.is_object()) return j.dump() + "\n";
  std::size_t key_width = 0;
  for (const auto& [k, v] : j.items()) key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : j.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << k << ":\n";
      append_table(os, v);
    } else if (v.is_object()) {
      os << k << ":\n";
      std::size_t w = 0;
      for (const auto& [kk, vv] : v.items()) w = std::max(w, kk.size());
      for (const auto& [kk, vv] : v.items()) os << "  " << kk << std::string(w - kk.size() + 2, ' ') << cell_text(vv) << '\n';
    } else {
      os << k << std::string(key_width - k.size() + 2, ' ') << cell_text(v) << '\n';
    }
  }
  return os.str();
}

}  // namespace toric
