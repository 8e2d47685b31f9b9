#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "toric/germ.hpp"
#include "toric/invariants.hpp"
#include "toric/lab.hpp"
#include "toric/structure.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

// The on-disk form of a germ:
//   {"dim": n, "rays": [[int,...],...], "boundary": ["p/q",...], "lattice_extra": [["p/q",...],...]}
// boundary and lattice_extra are optional.
struct GermDocument {
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  std::vector<Rational> boundary;
  std::vector<RatVector> lattice_extra;
};

// Throws ParseError with the line and field at fault.
GermDocument parse_germ_document(std::string_view text);
// Throws ValidationError naming the violated germ condition.
ToricGerm to_germ(const GermDocument& doc);
ToricGerm parse_germ(std::string_view text);

// Rays as primitive integer vectors of Z^n; lattice_extra lists the basis of N
// when N is not Z^n. Parsing the result gives back the same germ.
GermDocument to_document(const ToricGerm& g);
Json to_json(const GermDocument& doc);
std::string render_germ(const ToricGerm& g);

// Comma-separated coordinates, each an integer or p/q. Throws ParseError.
RatVector parse_point(std::string_view text);

// Integral entries become JSON integers when they fit in 64 bits; everything
// else is "p/q" text.
Json vector_json(std::span<const Rational> v);
Json vector_json(std::span<const Integer> v);

Json to_json(const MldResult& r);
Json to_json(const WindowCount& w);
Json to_json(const FiniteAbelianGroup& g);
Json to_json(const InstanceResult& r);
Json to_json(const ToricGerm& g, const Trichotomy& t);
Json to_json(const ToricGerm& g, const Decomposition& d);
Json to_json(const BlowupReport& r);
Json to_json(const ScanReport& r);

// {"families":[{"name":"ex1","param_range":[lo,hi]}],
//  "sampler":{"n":..,"max_rays":..,"coord_bound":..,"count":..,"seed":..},
//  "grid":[{"epsilon":"1/2","delta":"1/2"}]}; sampler optional. Throws ParseError.
ScanSpec parse_scan_spec(std::string_view text);

// Human-readable aligned rendering of a report produced by the functions above.
std::string pretty_table(const Json& j);

}  // namespace toric
