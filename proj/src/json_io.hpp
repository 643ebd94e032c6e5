#pragma once
// JSON <-> engine types. Every reader throws SchemaError with a path.

#include <string>

#include "bundlezeta/gt.hpp"
#include "json.hpp"

namespace bz::io {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

Integer read_integer(const json& j, const std::string& where);
Rational read_rational(const json& j, const std::string& where);
std::int64_t read_int64(const json& j, const std::string& where);
int read_int(const json& j, const std::string& where);
std::string read_string(const json& j, const std::string& where);
const json& member(const json& j, const char* key, const std::string& where);

IntMatrix read_matrix(const json& j, const std::string& where);
Coords read_coords(const json& j, const std::string& where);
GroupPtr read_group(const json& j, const std::string& where);
GroupRingElement read_element(const json& j, const GroupPtr& g, const std::string& where);
RingMatrix read_ring_matrix(const json& j, const GroupPtr& g, const std::string& where);
// array of elements per degree
Poly read_poly(const json& j, const GroupPtr& g, bool weight_graded, const std::string& where);
RationalForm read_rational_form(const json& j, const GroupPtr& g, bool weight_graded, const std::string& where);

// Matrix given inline: "[[2,1],[1,1]]"
IntMatrix parse_matrix_text(const std::string& text, const std::string& where);

MonodromySpec read_monodromy(const json& j, const std::string& where);
OrbitCatalog read_catalog(const json& j, const std::string& where);
RepresentationAssignment read_representation(const json& j, const std::string& where);
BundleSpec read_bundle(const json& j, const OrbitCatalog& catalog, int N, const std::string& where);
ClassLattice read_lattice(const json& j, const std::string& where);
std::vector<CurveRecord> read_curves(const json& j, const ClassLattice& lat, const GroupPtr& series_group,
                                     const std::string& where);
TwistRing read_twist_ring(const json& j, const ClassLattice& lat, const std::string& where);

json write_rational(const Rational& q);
json write_group(const FGAbelianGroup& g);
json write_matrix(const IntMatrix& m);
json write_element(const GroupRingElement& x);
json write_poly(const Poly& p);
json write_series(const GradedSeries& s);
json write_rational_form(const RationalForm& r);
json write_catalog(const OrbitCatalog& c);

}  // namespace bz::io
