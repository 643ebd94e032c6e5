#include "bundlezeta/verify.hpp"

#include <functional>
#include <map>

#include "bundlezeta/random_data.hpp"
#include "bundlezeta/wall_crossing.hpp"

namespace bz {

bool SuiteReport::ok() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (auto& c : checks) n += !c.ok;
  return n;
}

const std::vector<std::vector<std::vector<long>>>& corpus_matrices() {
  static const std::vector<std::vector<std::vector<long>>> m = {
      {{2, 1}, {1, 1}}, {{3, 1}, {2, 1}}, {{5, 2}, {2, 1}}, {{1, 1}, {1, 2}}, {{4, 1}, {3, 1}}};
  return m;
}

namespace {

IntMatrix to_matrix(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

int pick(int v, int dflt) { return v > 0 ? v : dflt; }

// Runs f, turning a thrown Error into a failed check.
void check(SuiteReport& rep, const std::string& name, const std::function<bool(std::string&)>& f) {
  CheckResult c{name, false, {}};
  try {
    c.ok = f(c.detail);
  } catch (const Error& e) {
    c.ok = false;
    c.detail = e.what();
  }
  rep.checks.push_back(std::move(c));
}

const OrbitCatalog& cat_map_catalog(int N) {
  static std::map<int, OrbitCatalog> cache;
  auto it = cache.find(N);
  if (it == cache.end()) it = cache.emplace(N, enumerate_torus_orbits(IntMatrix{{2, 1}, {1, 1}}, N)).first;
  return it->second;
}

void orbit_vs_det(SuiteReport& rep, const SuiteOptions& o) {
  const int N = pick(o.N, 10);
  for (auto& rows : corpus_matrices()) {
    IntMatrix A = to_matrix(rows);
    MonodromySpec spec = torus_monodromy(A);
    OrbitCensus census = torus_orbit_census(A, N);
    for (auto v : {ZetaVariant::Plain, ZetaVariant::TotalAbelian}) {
      const std::string tag = A.str() + (v == ZetaVariant::Plain ? " plain" : " total-Abelian");
      check(rep, tag + " orbit = det", [&](std::string& d) {
        GradedSeries orbit = zeta_orbit_route(census, N, v);
        GradedSeries det = zeta_det_route(spec, v).expand(N);
        if (orbit != det) d = "orbit " + render(orbit) + " vs det " + render(det);
        return orbit == det && det.is_integral();
      });
      check(rep, tag + " exp = det", [&](std::string& d) {
        GradedSeries e = zeta_exp_route(spec, N, v);
        GradedSeries det = zeta_det_route(spec, v).expand(N);
        if (e != det) d = "exp " + render(e) + " vs det " + render(det);
        return e == det;
      });
    }
  }
}

void lefschetz(SuiteReport& rep, const SuiteOptions& o) {
  const int N = pick(o.N, 10);
  for (auto& rows : corpus_matrices()) {
    IntMatrix A = to_matrix(rows);
    CatalogReport r = validate_orbit_catalog(torus_orbit_census(A, N), torus_monodromy(A), N);
    for (auto& l : r.lines)
      check(rep, A.str() + " n=" + std::to_string(l.n), [&](std::string& d) {
        if (!l.ok) d = "orbit side " + l.orbit_side.get_str() + ", L = " + l.lefschetz.get_str();
        // L(phi^n) = 2 - tr(A^n) for a torus map
        Integer expect = 2 - A.power(static_cast<unsigned>(l.n)).trace();
        if (l.lefschetz != expect) d += " L differs from 2 - tr(A^n) = " + expect.get_str();
        return l.ok && l.lefschetz == expect;
      });
  }
}

void theorem_identity(SuiteReport& rep, const SuiteOptions& o) {
  const int N = pick(o.N, 8);
  const OrbitCatalog& cat = cat_map_catalog(N);
  rnd::Rng r(o.seed);
  for (int i = 0; i < pick(o.count, 100); ++i) {
    BundleSpec b = rnd::random_bundle(r, cat, N);
    check(rep, "bundle " + std::to_string(i) + " genus " + std::to_string(b.fiber_genus), [&](std::string& d) {
      GradedSeries a = pi_twisted_zeta(cat, b, N), t = pi_twisted_zeta_theorem_route(cat, b, N);
      if (a != t) d = "trace route and product of twisted zetas differ";
      return a == t && a.is_integral();
    });
  }
}

void proposition_identity(SuiteReport& rep, const SuiteOptions& o) {
  const int N = pick(o.N, 8);
  const OrbitCatalog& cat = cat_map_catalog(N);
  rnd::Rng r(o.seed);
  for (int i = 0; i < pick(o.count, 100); ++i) {
    BundleSpec b = rnd::random_bundle(r, cat, N);
    BundleRing ring = bundle_ring(b);
    check(rep, "bundle " + std::to_string(i), [&](std::string& d) {
      for (auto& orb : cat.orbits) {
        auto rho = rho_pi_matrices(b, ring, orb.label);
        GradedSeries t = pi_local_trace(orb, rho, N);
        if (pi_local_proposition(orb, b, ring, N).expand(N) != t) return d = "torsion form differs at " + orb.label, false;
        if (pi_local_theorem(orb, rho, N).expand(N) != t) return d = "twisted local zetas differ at " + orb.label, false;
      }
      return true;
    });
  }
}

void direct_definition(SuiteReport& rep, const SuiteOptions& o) {
  const int N = pick(o.N, 8);
  const OrbitCatalog& cat = cat_map_catalog(N);
  rnd::Rng r(o.seed);
  for (int i = 0; i < pick(o.count, 10); ++i) {
    BundleSpec b = rnd::random_torus_bundle(r, cat, N);
    BundleRing ring = bundle_ring(b);
    check(rep, "torus bundle " + std::to_string(i), [&](std::string& d) {
      GradedSeries z = GradedSeries::one(ring.sum.group, N);
      for (auto& orb : cat.orbits) {
        GradedSeries direct = pi_local_direct(orb, b, ring, N);
        if (direct != pi_local_theorem(orb, rho_pi_matrices(b, ring, orb.label), N).expand(N))
          return d = "double orbit product differs at " + orb.label, false;
        z = z * direct;
      }
      if (z != pi_twisted_zeta_theorem_route(cat, b, N)) return d = "global products differ", false;
      return true;
    });
  }
}

void disk_bundle_suite(SuiteReport& rep, const SuiteOptions& o) {
  const int n = pick(o.N, 6);
  for (auto& rows : corpus_matrices()) {
    IntMatrix A = to_matrix(rows);
    OrbitCatalog cat = enumerate_torus_orbits(A, n);
    check(rep, A.str(), [&](std::string& d) {
      BundleSpec b = disk_bundle(cat);
      BundleRing ring = bundle_ring(b);
      GradedSeries zp = pi_twisted_zeta(cat, b, n);
      GradedSeries za = zeta_det_route(torus_monodromy(A), ZetaVariant::TotalAbelian).expand(n);
      if (zp.pushforward(ring.sum.proj2) != za) return d = "collapsed pi-zeta differs from the total-Abelian zeta", false;
      return true;
    });
  }
}

void taubes(SuiteReport& rep, const SuiteOptions&) {
  GroupPtr g = trivial_group();
  for (int s = 0; s <= 3; ++s)
    check(rep, "P(-," + std::to_string(s) + ") P(+," + std::to_string(s) + ") = 1", [&](std::string&) {
      return (taubes_p(-1, s) * taubes_p(1, s)).equals(RationalForm::one(g));
    });
  for (int sign : {1, -1})
    for (int s = 0; s <= 3; ++s)
      check(rep, "r(" + std::string(sign > 0 ? "+" : "-") + std::to_string(s) + ", 1) = sign", [&](std::string& d) {
        Integer r = r_coeff(taubes_p(sign, s), 1);
        d = "got " + r.get_str();
        return r == sign;
      });
  check(rep, "P(+,1) = 1 + z", [&](std::string&) {
    Poly p(g, {GroupRingElement::one(g), GroupRingElement::one(g)});
    return taubes_p(1, 1).equals(RationalForm(p));
  });
  const IntMatrix two{{2, 0}, {0, 2}};
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}})
    check(rep, "iota_compose(" + std::to_string(i) + "," + std::to_string(j) + ") = 2I", [&](std::string&) {
      return iota_compose(i, j).matrix == two && iota_compose(j, i).matrix == two;
    });
}

void wall_crossing(SuiteReport& rep, const SuiteOptions& o) {
  const int N = pick(o.N, 8);
  for (int k = 0; k < pick(o.count, 1); ++k) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
    WallCrossingReport w = wall_crossing_suite(seed, N);
    for (auto& c : w.cases) rep.checks.push_back({"seed " + std::to_string(seed) + " " + c.label, c.ok, c.detail});
  }
}

void product_mode_suite(SuiteReport& rep, const SuiteOptions& o) {
  const int W = pick(o.N, 8);
  for (auto& rows : corpus_matrices()) {
    IntMatrix A = to_matrix(rows);
    check(rep, A.str() + " GT = zeta_A at t = 1", [&](std::string& d) {
      ProductMode pm = product_mode(torus_orbit_census(A, W));
      GradedSeries lhs = gt(pm.lat, pm.curves, W);
      TotalAbelianData td = total_abelian_matrices(torus_monodromy(A));
      GradedSeries z = zeta_det_route(torus_monodromy(A), ZetaVariant::TotalAbelian).expand(W);
      GradedSeries rhs = specialize(z, GroupHom::identity(z.group()), TValue::SetToOne, td.h1.mu_weight);
      if (lhs != rhs) d = "GT " + render(lhs) + " vs " + render(rhs);
      return lhs == rhs && lhs.is_integral();
    });
  }
  rnd::Rng r(o.seed);
  for (auto& rows : std::vector<std::vector<std::vector<long>>>{{{2, 1}, {1, 1}}, {{-2, -1}, {-1, -1}}}) {
    IntMatrix A = to_matrix(rows);
    OrbitCatalog cat = enumerate_torus_orbits(A, W);
    for (int i = 0; i < pick(o.count, 2); ++i) {
      BundleSpec b = i % 2 ? rnd::random_torus_bundle(r, cat, W) : rnd::random_bundle(r, cat, W, 1, 2);
      check(rep, A.str() + " bundle " + std::to_string(i) + " GT_pi = zeta_pi at t = 1", [&](std::string& d) {
        ProductMode pm = product_mode(cat, b, W);
        GradedSeries lhs = gt_pi(pm.lat, *pm.ring, pm.curves, W);
        GradedSeries z = pi_twisted_zeta(cat, b, W);
        GradedSeries rhs = specialize(z, GroupHom::identity(z.group()), TValue::SetToOne, cat.mu_weight().after(pm.ring->to_x));
        if (lhs != rhs) d = "GT_pi and zeta_pi differ";
        return lhs == rhs && lhs.is_integral();
      });
    }
  }
}

void integrality(SuiteReport& rep, const SuiteOptions& o) {
  const int N = pick(o.N, 8);
  const OrbitCatalog& cat = cat_map_catalog(N);
  rnd::Rng r(o.seed);
  for (int i = 0; i < pick(o.count, 10); ++i) {
    BundleSpec b = rnd::random_bundle(r, cat, N);
    BundleRing ring = bundle_ring(b);
    check(rep, "bundle " + std::to_string(i), [&](std::string& d) {
      if (!pi_twisted_zeta(cat, b, N).is_integral()) return d = "pi-twisted zeta", false;
      for (auto& orb : cat.orbits)
        if (!pi_local_proposition(orb, b, ring, N).expand(N).is_integral()) return d = "local factor " + orb.label, false;
      // the trace-route logarithm is rational; its exponential is not allowed to be
      for (std::size_t k = 0; k < b.ranks().size(); ++k) {
        GradedSeries t = bundled_torsion_local(cat, b, static_cast<int>(k), GroupHom::identity(ring.sum.group), N);
        if (!t.is_integral()) return d = "bundled torsion " + std::to_string(k), false;
      }
      return true;
    });
  }
  for (auto& rows : corpus_matrices()) {
    IntMatrix A = to_matrix(rows);
    check(rep, A.str() + " exp route", [&](std::string& d) {
      d = "exp of rational Lefschetz data";
      return zeta_exp_route(torus_monodromy(A), N, ZetaVariant::TotalAbelian).is_integral();
    });
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {"orbit-vs-det", "lefschetz", "theorem-identity", "proposition-identity",
                                             "direct-definition", "disk-bundle", "taubes", "wall-crossing",
                                             "product-mode", "integrality"};
  return n;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  static const std::map<std::string, void (*)(SuiteReport&, const SuiteOptions&)> table = {
      {"orbit-vs-det", orbit_vs_det},           {"lefschetz", lefschetz},
      {"theorem-identity", theorem_identity},   {"proposition-identity", proposition_identity},
      {"direct-definition", direct_definition}, {"disk-bundle", disk_bundle_suite},
      {"taubes", taubes},                       {"wall-crossing", wall_crossing},
      {"product-mode", product_mode_suite},     {"integrality", integrality}};
  auto it = table.find(name);
  if (it == table.end()) throw PreconditionError("unknown verification suite '" + name + "'");
  SuiteReport rep{name, {}};
  it->second(rep, opt);
  return rep;
}

}  // namespace bz
