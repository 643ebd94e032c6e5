#include "job.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "bundlezeta/verify.hpp"
#include "toml_io.hpp"

namespace bz::job {

using io::json;

namespace {

const char* const kCommands[] = {"zeta", "torsion", "twisted-zeta", "pi-zeta", "alexander",
                                 "gt",   "gt-pi",   "product-mode", "verify", nullptr};

// One named value of a result, in both renderings.
struct Item {
  std::string key, text;
  json value;
};

struct Result {
  std::vector<Item> items;
  std::vector<std::string> extra_lines;  // text mode only, after the items
  bool failed = false;                   // verification outcome

  void add(std::string key, std::string text, json value) { items.push_back({std::move(key), std::move(text), std::move(value)}); }
};

const json* opt(const json& doc, const char* key) {
  auto it = doc.find(key);
  return it == doc.end() || it->is_null() ? nullptr : &*it;
}

std::string opt_string(const json& doc, const char* key, const std::string& dflt) {
  const json* v = opt(doc, key);
  return v ? io::read_string(*v, key) : dflt;
}

bool opt_bool(const json& doc, const char* key, bool dflt) {
  const json* v = opt(doc, key);
  if (!v) return dflt;
  if (!v->is_boolean()) throw SchemaError(key, "expected true or false");
  return v->get<bool>();
}

ZetaVariant read_variant(const json& doc, ZetaVariant dflt) {
  const json* v = opt(doc, "variant");
  if (!v) return dflt;
  std::string s = io::read_string(*v, "variant");
  if (s == "plain") return ZetaVariant::Plain;
  if (s == "total_abelian") return ZetaVariant::TotalAbelian;
  throw SchemaError("variant", "expected \"plain\" or \"total_abelian\", got \"" + s + "\"");
}

// `monodromy` as a document or a literal matrix string
MonodromySpec monodromy_of(const json& doc) {
  const json& m = io::member(doc, "monodromy", "");
  if (!m.is_string()) return io::read_monodromy(m, "monodromy");
  json parsed = json::parse(m.get<std::string>(), nullptr, false);
  if (parsed.is_discarded()) throw SchemaError("monodromy", "not a matrix literal: " + m.get<std::string>());
  return io::read_monodromy(parsed, "monodromy");
}

IntMatrix torus_map_of(const json& doc) {
  const json& m = io::member(doc, "torus_map", "");
  if (m.is_string()) return io::parse_matrix_text(m.get<std::string>(), "torus_map");
  return io::read_matrix(m, "torus_map");
}

// An explicit catalog, or the enumerated orbits of a torus map up to N.
OrbitCatalog catalog_of(const JobSpec& job) {
  if (const json* c = opt(job.payload, "catalog")) return io::read_catalog(*c, "catalog");
  if (opt(job.payload, "torus_map")) return enumerate_torus_orbits(torus_map_of(job.payload), job.N);
  throw SchemaError("catalog", "either catalog or torus_map is required");
}

// ---------------------------------------------------------------- rendering

// Over Z[t_mu] alone the series reads as one variable once t is set to 1.
bool collapses(const GroupPtr& g) { return g->rank() == 1 && g->ncoords() == 1; }

RenderOptions one_var() {
  RenderOptions o;
  o.single_variable = true;
  return o;
}

Item series_item(const std::string& key, const GradedSeries& s, const std::optional<GroupHom>& mu = std::nullopt) {
  if (mu && collapses(s.group())) {
    GradedSeries c = specialize(s, GroupHom::identity(s.group()), TValue::SetToOne, *mu);
    return {key, render(c, one_var()), io::write_series(c)};
  }
  if (s.weight_graded() && collapses(s.group())) return {key, render(s, one_var()), io::write_series(s)};
  return {key, render(s), io::write_series(s)};
}

Item form_item(const std::string& key, const RationalForm& r, const std::optional<GroupHom>& mu = std::nullopt) {
  if (mu && collapses(r.group())) {
    RationalForm c = specialize(r, GroupHom::identity(r.group()), TValue::SetToOne, *mu);
    return {key, render(c, one_var()), io::write_rational_form(c)};
  }
  return {key, render(r), io::write_rational_form(r)};
}

// ---------------------------------------------------------------- commands

Result cmd_zeta(const JobSpec& job) {
  const ZetaVariant v = read_variant(job.payload, ZetaVariant::Plain);
  const std::string route = opt_string(job.payload, "route", "det");
  Result res;
  std::optional<GroupHom> mu;
  GradedSeries s;
  if (route == "orbits") {
    OrbitCatalog cat = catalog_of(job);
    s = zeta_orbit_route(cat, job.N, v);
    if (v == ZetaVariant::TotalAbelian) mu = cat.mu_weight();
  } else {
    MonodromySpec spec = monodromy_of(job.payload);
    if (v == ZetaVariant::TotalAbelian) mu = total_abelian_matrices(spec).h1.mu_weight;
    if (route == "det") {
      RationalForm r = zeta_det_route(spec, v);
      s = r.expand(job.N);
      assert_integral(s, "zeta");
      res.items.push_back(form_item("closed_form", r, mu));
    } else if (route == "exp") {
      s = zeta_exp_route(spec, job.N, v);
    } else {
      throw SchemaError("route", "expected det, exp or orbits");
    }
  }
  assert_integral(s, "zeta");
  res.items.insert(res.items.begin(), series_item("zeta", s, mu));
  return res;
}

Result cmd_torsion(const JobSpec& job) {
  const ZetaVariant v = read_variant(job.payload, ZetaVariant::TotalAbelian);
  MonodromySpec spec = monodromy_of(job.payload);
  std::optional<GroupHom> mu;
  if (v == ZetaVariant::TotalAbelian) mu = total_abelian_matrices(spec).h1.mu_weight;
  RationalForm r = zeta_det_route(spec, v);
  assert_integral(r.num(), "torsion numerator");
  assert_integral(r.den(), "torsion denominator");
  Result res;
  res.items.push_back(form_item("torsion", r, mu));
  return res;
}

Result cmd_alexander(const JobSpec& job) {
  MonodromySpec spec = monodromy_of(job.payload);
  int i = 1;
  if (const json* k = opt(job.payload, "index")) i = io::read_int(*k, "index");
  TotalAbelianData d = total_abelian_matrices(spec);
  Poly p = alexander_polynomial(i, spec);
  assert_integral(p, "Alexander polynomial");
  Result res;
  res.items.push_back(form_item("alexander", RationalForm(p), d.h1.mu_weight));
  return res;
}

Result cmd_twisted_zeta(const JobSpec& job) {
  OrbitCatalog cat = catalog_of(job);
  const json& r = io::member(job.payload, "representation", "");
  RepresentationAssignment rep = io::read_representation(r, "representation");
  // one matrix for every orbit not listed
  if (const json* d = opt(r, "default")) {
    RingMatrix m = io::read_ring_matrix(*d, rep.group, "representation.default");
    for (auto& o : cat.orbits) rep.rho.emplace(o.label, m);
  }
  GradedSeries s = twisted_zeta(cat, rep, job.N, opt_bool(job.payload, "verify", false));
  Result res;
  res.items.push_back(series_item("twisted_zeta", s));
  return res;
}

Result cmd_pi_zeta(const JobSpec& job) {
  OrbitCatalog cat = catalog_of(job);
  BundleSpec b = io::read_bundle(io::member(job.payload, "bundle", ""), cat, job.N, "bundle");
  const std::string route = opt_string(job.payload, "route", "trace");
  GradedSeries s;
  if (route == "trace")
    s = pi_twisted_zeta(cat, b, job.N);
  else if (route == "theorem")
    s = pi_twisted_zeta_theorem_route(cat, b, job.N);
  else
    throw SchemaError("route", "expected trace or theorem");
  assert_integral(s, "pi-twisted zeta");
  Result res;
  res.add("ring", bundle_ring(b).sum.group->str(), io::write_group(*bundle_ring(b).sum.group));
  res.items.push_back(series_item("pi_zeta", s));
  return res;
}

std::string class_text(const Coords& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

Result cmd_gt(const JobSpec& job, bool twisted) {
  ClassLattice lat = io::read_lattice(io::member(job.payload, "lattice", ""), "lattice");
  std::optional<TwistRing> ring;
  if (twisted) ring = io::read_twist_ring(io::member(job.payload, "ring", ""), lat, "ring");
  std::vector<CurveRecord> curves =
      io::read_curves(io::member(job.payload, "curves", ""), lat, twisted ? ring->group : lat.group, "curves");
  check_curves(lat, curves);
  Result res;
  GradedSeries s = twisted ? gt_pi(lat, *ring, curves, job.N) : gt(lat, curves, job.N);
  assert_integral(s, twisted ? "GT_pi" : "GT");
  res.items.push_back(series_item(twisted ? "gt_pi" : "gt", s));
  if (const json* cl = opt(job.payload, "classes"); cl && !twisted) {
    if (!cl->is_array()) throw SchemaError("classes", "expected an array of classes");
    json values = json::array();
    std::string text;
    for (std::size_t i = 0; i < cl->size(); ++i) {
      Coords A = io::read_coords((*cl)[i], "classes[" + std::to_string(i) + "]");
      if (A.size() != lat.group->ncoords()) throw SchemaError("classes[" + std::to_string(i) + "]", "wrong number of coordinates");
      A = lat.group->reduce(A);
      Rational v = gt_class(lat, curves, A);
      if (v.get_den() != 1) throw IntegralityError("GT(X, " + class_text(A) + ") = " + v.get_str());
      values.push_back({{"class", A}, {"value", io::write_rational(v)}});
      text += (text.empty() ? "" : ", ") + class_text(A) + " -> " + v.get_str();
    }
    res.add("classes", text, std::move(values));
  }
  return res;
}

Result cmd_product_mode(const JobSpec& job) {
  OrbitCatalog cat = catalog_of(job);
  const int W = job.N;
  Result res;
  if (const json* bj = opt(job.payload, "bundle")) {
    BundleSpec b = io::read_bundle(*bj, cat, W, "bundle");
    ProductMode pm = product_mode(cat, b, W);
    GradedSeries lhs = gt_pi(pm.lat, *pm.ring, pm.curves, W);
    GradedSeries z = pi_twisted_zeta(cat, b, W);
    GradedSeries rhs = specialize(z, GroupHom::identity(z.group()), TValue::SetToOne, cat.mu_weight().after(pm.ring->to_x));
    res.items.push_back(series_item("gt_pi", lhs));
    res.items.push_back(series_item("zeta_pi_at_t1", rhs));
    res.failed = lhs != rhs || !lhs.is_integral();
  } else {
    ProductMode pm = product_mode(OrbitCensus::of(cat));
    GradedSeries lhs = gt(pm.lat, pm.curves, W);
    GradedSeries z = zeta_orbit_route(cat, W, ZetaVariant::TotalAbelian);
    GradedSeries rhs = specialize(z, GroupHom::identity(z.group()), TValue::SetToOne, cat.mu_weight());
    res.items.push_back(series_item("gt", lhs));
    res.items.push_back(series_item("zeta_a_at_t1", rhs));
    res.failed = lhs != rhs || !lhs.is_integral();
  }
  res.add("agree", res.failed ? "no" : "yes", !res.failed);
  return res;
}

Result cmd_verify(const JobSpec& job) {
  const std::string suite = opt_string(job.payload, "suite", "all");
  SuiteOptions so;
  so.seed = job.seed;
  if (opt(job.payload, "n")) so.N = job.N;
  if (const json* c = opt(job.payload, "count")) so.count = io::read_int(*c, "count");
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
      throw SchemaError("suite", "unknown suite '" + suite + "'");
    names.push_back(suite);
  }

  Result res;
  json reports = json::array();
  std::size_t total = 0, bad = 0;
  for (auto& name : names) {
    SuiteReport rep = run_suite(name, so);
    json checks = json::array();
    for (auto& c : rep.checks) {
      checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
      if (!c.ok) res.extra_lines.push_back("FAIL " + name + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
    total += rep.checks.size();
    bad += rep.failures();
    if (names.size() > 1)
      res.extra_lines.push_back(name + ": " + (rep.ok() ? "PASS" : "FAIL") + " (" + std::to_string(rep.checks.size()) + " cases)");
    reports.push_back({{"suite", name}, {"ok", rep.ok()}, {"checks", std::move(checks)}});
  }
  res.failed = bad > 0;
  std::string line = bad ? "FAIL (" + std::to_string(bad) + " of " + std::to_string(total) + " cases)"
                         : "PASS (" + std::to_string(total) + " cases)";
  res.extra_lines.push_back(line);
  res.add("suites", "", std::move(reports));
  res.add("summary", line, line);
  return res;
}

std::string render_text(const JobSpec& job, const Result& r) {
  std::ostringstream os;
  if (job.command == "verify") {
    for (auto& l : r.extra_lines) os << l << '\n';
    return os.str();
  }
  // a single value prints bare
  if (r.items.size() == 1) return r.items[0].text + "\n";
  for (auto& it : r.items) os << it.key << ": " << it.text << '\n';
  for (auto& l : r.extra_lines) os << l << '\n';
  return os.str();
}

std::string render_json(const JobSpec& job, const Result& r) {
  json out = {{"schema_version", io::kSchemaVersion}, {"command", job.command}, {"n", job.N}, {"status", r.failed ? "fail" : "ok"}};
  json result = json::object();
  for (auto& it : r.items) {
    json v = it.value;
    if (v.is_object() && !it.text.empty()) v["text"] = it.text;
    result[it.key] = std::move(v);
  }
  out["result"] = std::move(result);
  return out.dump(2) + "\n";
}

int exit_for(const std::exception& e) {
  if (dynamic_cast<const SchemaError*>(&e)) return kSchema;
  if (dynamic_cast<const IntegralityError*>(&e)) return kIntegrality;
  if (dynamic_cast<const PreconditionError*>(&e)) return kPrecondition;
  if (dynamic_cast<const json::exception*>(&e)) return kSchema;
  return kInternal;
}

}  // namespace

std::string error_kind(int code) {
  switch (code) {
    case kSchema: return "schema error";
    case kPrecondition: return "precondition failed";
    case kIntegrality: return "integrality violated";
    default: return "internal error";
  }
}

const char* const* command_names() { return kCommands; }

json parse_document(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw SchemaError("byte " + std::to_string(e.byte), "malformed JSON");
    }
  }
  return io::toml_to_json(text);
}

JobSpec make_job(const json& doc, const Overrides& o) {
  if (!doc.is_object()) throw SchemaError("", "a job is an object");
  const json& ver = io::member(doc, "schema_version", "");
  if (io::read_int(ver, "schema_version") != io::kSchemaVersion)
    throw SchemaError("schema_version", "unsupported version (this build reads " + std::to_string(io::kSchemaVersion) + ")");
  JobSpec job;
  job.command = io::read_string(io::member(doc, "command", ""), "command");
  bool known = false;
  for (auto c = kCommands; *c; ++c) known |= job.command == *c;
  if (!known) throw SchemaError("command", "unknown command '" + job.command + "'");

  job.N = o.default_n;
  if (const json* n = opt(doc, "n")) job.N = io::read_int(*n, "n");
  if (o.n) job.N = *o.n;
  if (job.N < 1) throw SchemaError("n", "truncation must be at least 1");

  if (const json* s = opt(doc, "seed")) {
    std::int64_t v = io::read_int64(*s, "seed");
    if (v < 0) throw SchemaError("seed", "must be nonnegative");
    job.seed = static_cast<std::uint64_t>(v);
  }
  if (o.seed) job.seed = *o.seed;

  if (const json* f = opt(doc, "format")) {
    std::string s = io::read_string(*f, "format");
    if (s == "text") job.format = Format::Text;
    else if (s == "json") job.format = Format::Json;
    else throw SchemaError("format", "expected text or json");
  }
  if (o.format) job.format = *o.format;
  job.payload = doc;
  return job;
}

Outcome run(const JobSpec& job) {
  static const std::map<std::string, std::function<Result(const JobSpec&)>> table = {
      {"zeta", cmd_zeta},
      {"torsion", cmd_torsion},
      {"alexander", cmd_alexander},
      {"twisted-zeta", cmd_twisted_zeta},
      {"pi-zeta", cmd_pi_zeta},
      {"gt", [](const JobSpec& j) { return cmd_gt(j, false); }},
      {"gt-pi", [](const JobSpec& j) { return cmd_gt(j, true); }},
      {"product-mode", cmd_product_mode},
      {"verify", cmd_verify}};
  Result r = table.at(job.command)(job);
  Outcome out;
  out.exit_code = r.failed ? kVerifyFailed : kOk;
  out.output = job.format == Format::Json ? render_json(job, r) : render_text(job, r);
  return out;
}

Outcome run_text(const std::string& text, const Overrides& o) {
  Outcome out;
  try {
    return run(make_job(parse_document(text), o));
  } catch (const std::exception& e) {
    out.exit_code = exit_for(e);
    out.error = error_kind(out.exit_code) + ": " + e.what();
  }
  return out;
}

}  // namespace bz::job
