#include "json_io.hpp"

#include "bundlezeta/random_data.hpp"

namespace bz::io {

namespace {

std::string at(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }
std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array");
  return j;
}

const json& object(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  return j;
}

const json* optional_member(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

}  // namespace

const json& member(const json& j, const char* key, const std::string& where) {
  object(j, where);
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at(where, key), "missing");
  return *it;
}

Integer read_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw SchemaError(where, "not an integer: " + j.get<std::string>());
    return z;
  }
  throw SchemaError(where, "expected an integer");
}

Rational read_rational(const json& j, const std::string& where) {
  if (j.is_string()) {
    Rational q;
    const std::string s = j.get<std::string>();
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw SchemaError(where, "not a rational number: " + s);
    q.canonicalize();
    return q;
  }
  return Rational(read_integer(j, where));
}

std::int64_t read_int64(const json& j, const std::string& where) {
  Integer z = read_integer(j, where);
  if (!z.fits_slong_p()) throw SchemaError(where, "integer out of range");
  return z.get_si();
}

int read_int(const json& j, const std::string& where) {
  std::int64_t v = read_int64(j, where);
  if (v < INT32_MIN || v > INT32_MAX) throw SchemaError(where, "integer out of range");
  return static_cast<int>(v);
}

std::string read_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where, "expected a string");
  return j.get<std::string>();
}

IntMatrix read_matrix(const json& j, const std::string& where) {
  array(j, where);
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = at(where, i);
    array(j[i], w);
    std::vector<Integer> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(read_integer(j[i][k], at(w, k)));
    if (!rows.empty() && row.size() != rows[0].size()) throw SchemaError(w, "ragged matrix");
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

Coords read_coords(const json& j, const std::string& where) {
  array(j, where);
  Coords c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(read_int64(j[i], at(where, i)));
  return c;
}

GroupPtr read_group(const json& j, const std::string& where) {
  object(j, where);
  int rank = read_int(member(j, "rank", where), at(where, "rank"));
  if (rank < 0) throw SchemaError(at(where, "rank"), "must be nonnegative");
  Coords tors;
  if (const json* t = optional_member(j, "torsion")) tors = read_coords(*t, at(where, "torsion"));
  try {
    return make_group(static_cast<std::size_t>(rank), tors);
  } catch (const PreconditionError& e) {
    throw SchemaError(at(where, "torsion"), e.what());
  }
}

namespace {

Coords checked_coords(const json& j, const GroupPtr& g, const std::string& where) {
  Coords c = read_coords(j, where);
  if (c.size() != g->ncoords())
    throw SchemaError(where, "expected " + std::to_string(g->ncoords()) + " coordinates for " + g->str());
  return g->reduce(c);
}

}  // namespace

GroupRingElement read_element(const json& j, const GroupPtr& g, const std::string& where) {
  GroupRingElement x(g);
  // a bare number is a constant
  if (j.is_number() || j.is_string()) return GroupRingElement::constant(g, read_rational(j, where));
  array(j, where);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = at(where, i);
    if (!j[i].is_array() || j[i].size() != 2) throw SchemaError(w, "expected a term [coefficient, [coordinates]]");
    x.add_term(checked_coords(j[i][1], g, at(w, 1)), read_rational(j[i][0], at(w, 0)));
  }
  return x;
}

RingMatrix read_ring_matrix(const json& j, const GroupPtr& g, const std::string& where) {
  array(j, where);
  RingMatrix m(g, j.size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string w = at(where, r);
    array(j[r], w);
    if (j[r].size() != j.size()) throw SchemaError(w, "ring matrix must be square");
    for (std::size_t c = 0; c < j.size(); ++c) m(r, c) = read_element(j[r][c], g, at(w, c));
  }
  return m;
}

Poly read_poly(const json& j, const GroupPtr& g, bool weight_graded, const std::string& where) {
  array(j, where);
  std::vector<GroupRingElement> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(read_element(j[i], g, at(where, i)));
  return Poly(g, std::move(c), weight_graded);
}

RationalForm read_rational_form(const json& j, const GroupPtr& g, bool weight_graded, const std::string& where) {
  // a bare array is a polynomial
  if (j.is_array()) return RationalForm(read_poly(j, g, weight_graded, where));
  object(j, where);
  Poly num = read_poly(member(j, "num", where), g, weight_graded, at(where, "num"));
  Poly den = Poly::one(g, weight_graded);
  if (const json* d = optional_member(j, "den")) den = read_poly(*d, g, weight_graded, at(where, "den"));
  try {
    return RationalForm(num, den);
  } catch (const PreconditionError& e) {
    throw SchemaError(where, e.what());
  }
}

IntMatrix parse_matrix_text(const std::string& text, const std::string& where) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError(where, "not a matrix literal: " + text);
  return read_matrix(j, where);
}

MonodromySpec read_monodromy(const json& j, const std::string& where) {
  // a bare matrix is a closed torus (or higher genus) map
  if (j.is_array()) {
    IntMatrix m = read_matrix(j, where);
    return m.rows() == 2 && m.cols() == 2 ? torus_monodromy(m) : MonodromySpec::closed(m);
  }
  object(j, where);
  IntMatrix phi1 = read_matrix(member(j, "phi1", where), at(where, "phi1"));
  int boundary = 0;
  if (const json* b = optional_member(j, "boundary")) boundary = read_int(*b, at(where, "boundary"));
  MonodromySpec s;
  if (boundary == 0) {
    s = MonodromySpec::closed(phi1);
  } else {
    const json* g = optional_member(j, "genus");
    if (!g) throw SchemaError(at(where, "genus"), "missing (required with boundary)");
    s = MonodromySpec::bordered(phi1, read_int(*g, at(where, "genus")), boundary);
  }
  if (const json* lifts = optional_member(j, "lifts")) {
    s.lift_group = mapping_torus_h1(phi1).coker;
    array(*lifts, at(where, "lifts"));
    for (std::size_t i = 0; i < lifts->size(); ++i)
      s.lifts.push_back(read_ring_matrix((*lifts)[i], s.lift_group, at(at(where, "lifts"), i)));
  } else if (boundary == 0 && phi1.rows() == 2) {
    s = torus_monodromy(phi1);
  }
  return s;
}

OrbitCatalog read_catalog(const json& j, const std::string& where) {
  OrbitCatalog c;
  c.h1 = read_group(member(j, "h1", where), at(where, "h1"));
  c.mu_index = 0;
  if (const json* m = optional_member(j, "mu_index")) c.mu_index = static_cast<std::size_t>(read_int(*m, at(where, "mu_index")));
  const json& orbits = array(member(j, "orbits", where), at(where, "orbits"));
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const std::string w = at(at(where, "orbits"), i);
    const json& o = object(orbits[i], w);
    OrbitRecord r;
    r.label = read_string(member(o, "label", w), at(w, "label"));
    r.period = read_int(member(o, "period", w), at(w, "period"));
    const std::string kind = read_string(member(o, "kind", w), at(w, "kind"));
    try {
      r.kind = parse_orbit_kind(kind);
    } catch (const SchemaError& e) {
      throw SchemaError(at(w, "kind"), e.what());
    }
    r.h1_class = checked_coords(member(o, "h1_class", w), c.h1, at(w, "h1_class"));
    c.orbits.push_back(std::move(r));
  }
  try {
    c.check();
  } catch (const PreconditionError& e) {
    throw SchemaError(where, e.what());
  }
  return c;
}

RepresentationAssignment read_representation(const json& j, const std::string& where) {
  RepresentationAssignment rep;
  rep.group = read_group(member(j, "group", where), at(where, "group"));
  const json& rho = object(member(j, "rho", where), at(where, "rho"));
  for (auto it = rho.begin(); it != rho.end(); ++it)
    rep.rho.emplace(it.key(), read_ring_matrix(it.value(), rep.group, at(at(where, "rho"), it.key())));
  return rep;
}

BundleSpec read_bundle(const json& j, const OrbitCatalog& catalog, int N, const std::string& where) {
  object(j, where);
  std::string kind = "explicit";
  if (const json* k = optional_member(j, "construction")) kind = read_string(*k, at(where, "construction"));
  if (kind == "disk") return disk_bundle(catalog);
  if (kind == "random" || kind == "random_torus") {
    std::uint64_t seed = 1;
    if (const json* s = optional_member(j, "seed")) seed = static_cast<std::uint64_t>(read_int64(*s, at(where, "seed")));
    rnd::Rng r(seed);
    if (kind == "random_torus") return rnd::random_torus_bundle(r, catalog, N);
    int gmin = 1, gmax = 3;
    if (const json* g = optional_member(j, "genus_min")) gmin = read_int(*g, at(where, "genus_min"));
    if (const json* g = optional_member(j, "genus_max")) gmax = read_int(*g, at(where, "genus_max"));
    if (gmin < 1 || gmax < gmin) throw SchemaError(at(where, "genus_min"), "need 1 <= genus_min <= genus_max");
    return rnd::random_bundle(r, catalog, N, gmin, gmax);
  }
  if (kind == "torus_fiber") {
    GroupPtr E = read_group(member(j, "extra_group", where), at(where, "extra_group"));
    std::map<std::string, TorusFiberChoice> choice;
    const json& f = object(member(j, "fibers", where), at(where, "fibers"));
    for (auto it = f.begin(); it != f.end(); ++it) {
      const std::string w = at(at(where, "fibers"), it.key());
      TorusFiberChoice c;
      c.psi = read_matrix(member(it.value(), "psi", w), at(w, "psi"));
      c.e_l = checked_coords(member(it.value(), "e_l", w), E, at(w, "e_l"));
      c.k_to_e = read_matrix(member(it.value(), "k_to_e", w), at(w, "k_to_e"));
      choice.emplace(it.key(), std::move(c));
    }
    return torus_fiber_bundle(catalog, E, choice);
  }
  if (kind != "explicit") throw SchemaError(at(where, "construction"), "unknown construction '" + kind + "'");

  BundleSpec b;
  b.fiber_genus = read_int(member(j, "fiber_genus", where), at(where, "fiber_genus"));
  if (const json* fb = optional_member(j, "fiber_boundary")) b.fiber_boundary = read_int(*fb, at(where, "fiber_boundary"));
  b.h1y = catalog.h1;
  b.h1v = read_group(member(j, "h1v", where), at(where, "h1v"));
  try {
    b.proj = GroupHom(b.h1v, b.h1y, read_matrix(member(j, "proj", where), at(where, "proj")));
  } catch (const PreconditionError& e) {
    throw SchemaError(at(where, "proj"), e.what());
  }
  const json& orbits = object(member(j, "orbits", where), at(where, "orbits"));
  for (auto it = orbits.begin(); it != orbits.end(); ++it) {
    const std::string w = at(at(where, "orbits"), it.key());
    const json& o = object(it.value(), w);
    BundleOrbitData d;
    d.m1 = read_matrix(member(o, "m1", w), at(w, "m1"));
    auto h1 = std::make_shared<const MappingTorusH1>(mapping_torus_h1(d.m1));
    d.h1 = h1;
    const json& lifts = array(member(o, "lifts", w), at(w, "lifts"));
    for (std::size_t i = 0; i < lifts.size(); ++i) d.lifts.push_back(read_ring_matrix(lifts[i], h1->coker, at(at(w, "lifts"), i)));
    try {
      d.incl = GroupHom(h1->group, b.h1v, read_matrix(member(o, "incl", w), at(w, "incl")));
    } catch (const PreconditionError& e) {
      throw SchemaError(at(w, "incl"), e.what());
    }
    if (const json* psi = optional_member(o, "psi")) d.psi = read_matrix(*psi, at(w, "psi"));
    b.orbits.emplace(it.key(), std::move(d));
  }
  return b;
}

ClassLattice read_lattice(const json& j, const std::string& where) {
  object(j, where);
  int rank = read_int(member(j, "rank", where), at(where, "rank"));
  if (rank < 0) throw SchemaError(at(where, "rank"), "must be nonnegative");
  Coords tors;
  if (const json* t = optional_member(j, "torsion")) tors = read_coords(*t, at(where, "torsion"));
  ClassLattice lat;
  try {
    lat.group = make_group(static_cast<std::size_t>(rank), tors);
  } catch (const PreconditionError& e) {
    throw SchemaError(at(where, "torsion"), e.what());
  }
  lat.Q = read_matrix(member(j, "Q", where), at(where, "Q"));
  if (lat.Q.rows() == 0) lat.Q = IntMatrix(0, 0);
  const json& c1 = array(member(j, "c1", where), at(where, "c1"));
  for (std::size_t i = 0; i < c1.size(); ++i) lat.c1.push_back(read_integer(c1[i], at(at(where, "c1"), i)));
  IntMatrix w(1, lat.group->ncoords());
  if (const json* wt = optional_member(j, "weight")) {
    Coords c = read_coords(*wt, at(where, "weight"));
    if (c.size() != lat.group->ncoords()) throw SchemaError(at(where, "weight"), "one entry per coordinate");
    for (std::size_t i = 0; i < c.size(); ++i) w(0, i) = c[i];
  } else {
    for (std::size_t i = 0; i < lat.group->rank(); ++i) w(0, i) = 1;
  }
  try {
    lat.weight = GroupHom(lat.group, make_group(1), w);
    lat.check();
  } catch (const PreconditionError& e) {
    throw SchemaError(where, e.what());
  }
  return lat;
}

std::vector<CurveRecord> read_curves(const json& j, const ClassLattice& lat, const GroupPtr& series_group,
                                     const std::string& where) {
  array(j, where);
  std::vector<CurveRecord> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = at(where, i);
    const json& o = object(j[i], w);
    CurveRecord c;
    c.label = "C" + std::to_string(i);
    if (const json* l = optional_member(o, "label")) c.label = read_string(*l, at(w, "label"));
    c.cls = checked_coords(member(o, "class", w), lat.group, at(w, "class"));
    c.sign = read_int(member(o, "sign", w), at(w, "sign"));
    if (c.sign != 1 && c.sign != -1) throw SchemaError(at(w, "sign"), "must be 1 or -1");
    if (const json* n = optional_member(o, "count")) c.count = read_integer(*n, at(w, "count"));
    if (const json* t = optional_member(o, "torus_type")) {
      const std::string tw = at(w, "torus_type");
      TorusType tt{c.sign, {}};
      if (const json* s = optional_member(*t, "sign")) tt.sign = read_int(*s, at(tw, "sign"));
      for (auto x : read_coords(member(*t, "I", tw), at(tw, "I"))) tt.I.insert(static_cast<int>(x));
      c.torus_type = tt;
    }
    if (const json* g = optional_member(o, "gt_w")) c.gt_w = read_element(*g, series_group, at(w, "gt_w"));
    if (const json* s = optional_member(o, "series")) {
      CurveSeries cs{read_rational_form(*s, series_group, true, at(w, "series")), {}};
      if (const json* cv = optional_member(o, "cover_series")) {
        object(*cv, at(w, "cover_series"));
        for (auto it = cv->begin(); it != cv->end(); ++it) {
          const std::string cw = at(at(w, "cover_series"), it.key());
          int k = 0;
          try {
            k = std::stoi(it.key());
          } catch (const std::exception&) {
            throw SchemaError(cw, "cover keys are 1..4");
          }
          if (k < 1 || k > 4) throw SchemaError(cw, "cover keys are 1..4");
          cs.covers.emplace(k, read_rational_form(it.value(), series_group, true, cw));
        }
      }
      c.series = std::move(cs);
    } else if (optional_member(o, "cover_series")) {
      throw SchemaError(at(w, "cover_series"), "cover series need the curve series");
    }
    out.push_back(std::move(c));
  }
  return out;
}

TwistRing read_twist_ring(const json& j, const ClassLattice& lat, const std::string& where) {
  TwistRing r;
  r.group = read_group(member(j, "group", where), at(where, "group"));
  try {
    r.to_x = GroupHom(r.group, lat.group, read_matrix(member(j, "to_x", where), at(where, "to_x")));
    r.from_x = GroupHom(lat.group, r.group, read_matrix(member(j, "from_x", where), at(where, "from_x")));
  } catch (const PreconditionError& e) {
    throw SchemaError(where, e.what());
  }
  return r;
}

// ---------------------------------------------------------------- writers

json write_rational(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
  return json(q.get_str());
}

json write_group(const FGAbelianGroup& g) {
  return json{{"rank", g.rank()}, {"torsion", g.torsion()}};
}

json write_matrix(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(write_rational(Rational(m(i, k))));
    rows.push_back(std::move(row));
  }
  return rows;
}

json write_element(const GroupRingElement& x) {
  json terms = json::array();
  for (auto& [g, c] : x.terms()) terms.push_back(json::array({write_rational(c), g}));
  return terms;
}

json write_poly(const Poly& p) {
  json c = json::array();
  for (auto& x : p.coeffs()) c.push_back(write_element(x));
  return c;
}

json write_series(const GradedSeries& s) {
  json c = json::array();
  for (auto& x : s.coeffs()) c.push_back(write_element(x));
  return json{{"group", write_group(*s.group())},
              {"truncation", s.truncation()},
              {"weight_graded", s.weight_graded()},
              {"coeffs", std::move(c)}};
}

json write_rational_form(const RationalForm& r) {
  return json{{"group", write_group(*r.group())},
              {"weight_graded", r.weight_graded()},
              {"num", write_poly(r.num())},
              {"den", write_poly(r.den())}};
}

json write_catalog(const OrbitCatalog& c) {
  json orbits = json::array();
  for (auto& o : c.orbits)
    orbits.push_back({{"label", o.label}, {"period", o.period}, {"kind", to_string(o.kind)}, {"h1_class", o.h1_class}});
  return json{{"h1", write_group(*c.h1)}, {"mu_index", c.mu_index}, {"orbits", std::move(orbits)}};
}

}  // namespace bz::io
