#include "bundlezeta/bundle.hpp"

namespace bz {

namespace {

// Same entries, coefficients tagged with the (structurally equal) group g.
RingMatrix retag(const RingMatrix& m, const GroupPtr& g) {
  if (m.group() == g) return m;
  require_same_group(m.group(), g, "lifted matrix");
  RingMatrix r(g, m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      for (auto& [k, c] : m(i, j).terms()) r(i, j).add_term(k, c);
  return r;
}

struct LocalV {
  std::shared_ptr<const MappingTorusH1> kl;
  GroupHom k_to_v;
  GroupRingElement zl;  // z_{incl(l)} in Z[H_1(V)]
};

LocalV local_v(const BundleSpec& b, const BundleOrbitData& d) {
  LocalV v{d.h1 ? d.h1 : std::make_shared<const MappingTorusH1>(mapping_torus_h1(d.m1)), {}, {}};
  require_same_group(d.incl.source(), v.kl->group, "incl source");
  require_same_group(d.incl.target(), b.h1v, "incl target");
  v.k_to_v = d.incl.after(v.kl->coker_inclusion);
  Coords l = v.kl->group->zero();
  l[v.kl->mu_index] = 1;
  v.zl = GroupRingElement::monomial(b.h1v, d.incl.apply(l));
  return v;
}

// m~_i pushed to Z[H_1(V)] and multiplied by z_l
// optionally pushed on along `then` in the same pass
std::vector<RingMatrix> lifts_in_v(const BundleSpec& b, const BundleOrbitData& d, const GroupHom* then = nullptr) {
  LocalV v = local_v(b, d);
  const GroupHom h = then ? then->after(v.k_to_v) : v.k_to_v;
  const GroupRingElement z = then ? v.zl.pushforward(*then) : v.zl;
  std::vector<RingMatrix> out;
  for (auto& m : d.lifts) out.push_back(retag(m, v.kl->coker).pushforward(h) * z);
  return out;
}

const BundleOrbitData& data_for(const BundleSpec& b, const std::string& label) {
  auto it = b.orbits.find(label);
  if (it == b.orbits.end()) throw PreconditionError("bundle has no fiber data for orbit " + label);
  return it->second;
}

// P(s) with s -> sign * unit * t^p, coefficients pushed along h.
Poly substitute(const Poly& P, const GroupHom& h, const GroupRingElement& unit, int sign, int p) {
  const GroupPtr& g = h.target();
  std::vector<GroupRingElement> c(static_cast<std::size_t>(std::max(0, P.degree()) * p + 1), GroupRingElement(g));
  GroupRingElement pw = GroupRingElement::one(g);
  for (int j = 0; j <= P.degree(); ++j) {
    c[static_cast<std::size_t>(j * p)] = P.coeff(j).pushforward(h) * pw;
    pw = pw * unit * Rational(sign);
  }
  return Poly(g, std::move(c));
}

}  // namespace

std::vector<std::size_t> BundleSpec::ranks() const {
  const auto g2 = static_cast<std::size_t>(2 * fiber_genus);
  if (fiber_boundary == 0) return {1, g2, 1};
  return {1, g2 + static_cast<std::size_t>(fiber_boundary) - 1};
}

void validate_bundle(const BundleSpec& b, const OrbitCatalog& catalog, int N) {
  if (b.fiber_genus < 0 || b.fiber_boundary < 0) throw PreconditionError("fiber genus and boundary count must be nonnegative");
  require_same_group(b.h1y, catalog.h1, "bundle H_1(Y) against the orbit catalog");
  require_same_group(b.proj.source(), b.h1v, "proj source");
  require_same_group(b.proj.target(), b.h1y, "proj target");
  const auto ranks = b.ranks();
  for (auto& o : catalog.orbits) {
    if (N >= 0 && o.period > N) continue;
    const BundleOrbitData& d = data_for(b, o.label);
    const std::string at = " (orbit " + o.label + ")";
    if (!d.m1.square() || d.m1.rows() != ranks[1]) throw PreconditionError("fiber monodromy has the wrong size" + at);
    LocalV v = local_v(b, d);
    if (d.lifts.size() != ranks.size()) throw PreconditionError("expected one lifted matrix per fiber homology group" + at);
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      if (d.lifts[i].dim() != ranks[i]) throw PreconditionError("lifted matrix " + std::to_string(i) + " has the wrong size" + at);
      if (!same_group(d.lifts[i].group(), v.kl->coker))
        throw PreconditionError("lifted matrices must have coefficients in Z[coker(1 - m1)]" + at);
    }
    if (d.lifts[1].augmentation() != d.m1) throw PreconditionError("augmentation of m~_1 differs from m1" + at);
    if (d.lifts[0].augmentation() != IntMatrix::identity(1)) throw PreconditionError("augmentation of m~_0 must be [1]" + at);
    if (ranks.size() == 3 && d.lifts[2].augmentation() != IntMatrix::identity(1))
      throw PreconditionError("augmentation of m~_2 must be [1] (orientation preserving)" + at);
    Coords l = v.kl->group->zero();
    l[v.kl->mu_index] = 1;
    if (b.proj.apply(d.incl.apply(l)) != catalog.h1->reduce(o.h1_class))
      throw PreconditionError("proj(incl(l)) differs from the orbit class" + at);
    GroupHom fib = b.proj.after(v.k_to_v);
    if (!(fib == GroupHom::zero(v.kl->coker, b.h1y))) throw PreconditionError("fiber classes must project to zero in H_1(Y)" + at);
    if (d.psi && *d.psi != d.m1) throw PreconditionError("torus map psi differs from m1" + at);
  }
}

BundleRing bundle_ring(const BundleSpec& b) {
  DirectSum ds = direct_sum(b.h1v, b.h1y);
  IntMatrix m = ds.inj1.matrix() + ds.inj2.matrix() * b.proj.matrix();
  return {ds, GroupHom(b.h1v, ds.group, std::move(m))};
}

std::vector<RingMatrix> rho_pi_matrices(const BundleSpec& b, const BundleRing& ring, const std::string& label) {
  return lifts_in_v(b, data_for(b, label), &ring.p);
}

std::vector<RingMatrix> rho_pi_matrices(const BundleSpec& b, const std::string& label) {
  return rho_pi_matrices(b, bundle_ring(b), label);
}

GradedSeries pi_local_trace(const OrbitRecord& o, const std::vector<RingMatrix>& rho, int N) {
  if (rho.empty()) throw PreconditionError("no matrices for orbit " + o.label);
  const GroupPtr& g = rho[0].group();
  GradedSeries s(g, N);
  std::vector<RingMatrix> pw;
  for (int m = 1; o.period * m <= N; ++m) {
    GroupRingElement L(g);
    for (std::size_t i = 0; i < rho.size(); ++i) {
      if (m == 1) pw.push_back(rho[i]); else pw[i] = pw[i] * rho[i];
      if (i % 2) L -= pw[i].trace(); else L += pw[i].trace();
    }
    s[o.period * m] = L * frac(lefschetz_sign(o.kind, m), m);
  }
  GradedSeries z = s.exp();
  assert_integral(z, "local pi-twisted zeta of " + o.label);
  return z;
}

RationalForm pi_local_theorem(const OrbitRecord& o, const std::vector<RingMatrix>& rho, int N) {
  if (rho.empty()) throw PreconditionError("no matrices for orbit " + o.label);
  RationalForm r = RationalForm::one(rho[0].group());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    RationalForm f = twisted_local_zeta(o.kind, rho[i], o.period, N);
    r = i % 2 ? r / f : r * f;
  }
  return r;
}

RationalForm local_torsion_v(const BundleSpec& b, const std::string& label, int max_degree) {
  auto ms = lifts_in_v(b, data_for(b, label));
  Poly num = Poly::one(b.h1v), den = Poly::one(b.h1v);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Poly c = char_series(ms[i], max_degree);
    if (i % 2) num = num * c; else den = den * c;
  }
  return RationalForm(num, den);
}

RationalForm pi_local_proposition(const OrbitRecord& o, const BundleSpec& b, const BundleRing& ring, int N) {
  RationalForm tau = local_torsion_v(b, o.label, N < 0 ? -1 : N / o.period);
  GroupRingElement td = GroupRingElement::monomial(ring.sum.group, ring.sum.inj2.apply(b.h1y->reduce(o.h1_class)));
  int sign = o.kind == OrbitKind::NegativeHyperbolic ? -1 : 1;
  RationalForm at(substitute(tau.num(), ring.sum.inj1, td, sign, o.period),
                  substitute(tau.den(), ring.sum.inj1, td, sign, o.period));
  return o.kind == OrbitKind::Elliptic ? at : at.inverse();
}

GradedSeries pi_local_direct(const OrbitRecord& o, const BundleSpec& b, const BundleRing& ring, int N) {
  const BundleOrbitData& d = data_for(b, o.label);
  if (!d.psi) throw PreconditionError("direct route needs a torus fiber map for orbit " + o.label);
  const GroupPtr& S = ring.sum.group;
  const int qmax = N / o.period;
  std::map<std::tuple<int, OrbitKind, Coords>, Integer> census;
  if (qmax >= 1)
    for_each_torus_orbit(*d.psi, qmax, [&](const TorusOrbit& g) { census[{g.period, g.kind, g.h1_class}] += 1; });
  GradedSeries L(S, N);
  for (auto& [key, count] : census) {
    auto& [q, kind, cls] = key;
    Coords x = ring.p.apply(d.incl.apply(cls));
    for (int m = 1; o.period * q * m <= N; ++m) {
      int sign = lefschetz_sign(o.kind, q * m) * lefschetz_sign(kind, m);
      Rational c(count * sign);
      c /= m;
      L[o.period * q * m] += GroupRingElement::monomial(S, S->scale(x, m), c);
    }
  }
  GradedSeries z = L.exp();
  assert_integral(z, "definition-route local zeta of " + o.label);
  return z;
}

GradedSeries pi_twisted_zeta(const OrbitCatalog& catalog, const BundleSpec& b, int N) {
  validate_bundle(b, catalog, N);
  BundleRing ring = bundle_ring(b);
  GradedSeries z = GradedSeries::one(ring.sum.group, N);
  for (auto& o : catalog.orbits) {
    if (o.period > N) continue;
    z = z * pi_local_trace(o, rho_pi_matrices(b, ring, o.label), N);
  }
  assert_integral(z, "pi-twisted zeta");
  return z;
}

GradedSeries pi_twisted_zeta_theorem_route(const OrbitCatalog& catalog, const BundleSpec& b, int N) {
  validate_bundle(b, catalog, N);
  BundleRing ring = bundle_ring(b);
  const std::size_t n = b.ranks().size();
  std::vector<RepresentationAssignment> reps(n, RepresentationAssignment{ring.sum.group, {}});
  for (auto& o : catalog.orbits) {
    if (o.period > N) continue;
    auto rho = rho_pi_matrices(b, ring, o.label);
    for (std::size_t i = 0; i < n; ++i) reps[i].rho.emplace(o.label, std::move(rho[i]));
  }
  GradedSeries z = GradedSeries::one(ring.sum.group, N);
  for (std::size_t i = 0; i < n; ++i) {
    GradedSeries f = twisted_zeta(catalog, reps[i], N);
    z = i % 2 ? z * f.inverse() : z * f;
  }
  assert_integral(z, "theorem-route pi-twisted zeta");
  return z;
}

RingMatrix bundled_specialize(const BundleSpec& b, const std::string& label, int i, const GroupHom& h) {
  auto rho = rho_pi_matrices(b, label);
  if (i < 0 || static_cast<std::size_t>(i) >= rho.size()) throw PreconditionError("no representation of index " + std::to_string(i));
  return rho[static_cast<std::size_t>(i)].pushforward(h);
}

GradedSeries bundled_torsion_local(const OrbitCatalog& catalog, const BundleSpec& b, int i, const GroupHom& h, int N) {
  validate_bundle(b, catalog, N);
  BundleRing ring = bundle_ring(b);
  require_same_group(h.source(), ring.sum.group, "bundled specialization");
  GradedSeries z = GradedSeries::one(h.target(), N);
  for (auto& o : catalog.orbits) {
    if (o.period > N) continue;
    auto rho = rho_pi_matrices(b, ring, o.label);
    if (i < 0 || static_cast<std::size_t>(i) >= rho.size()) throw PreconditionError("no representation of index " + std::to_string(i));
    Poly delta = char_series(rho[static_cast<std::size_t>(i)].pushforward(h), N / o.period);
    switch (o.kind) {
      case OrbitKind::Elliptic: z = z * RationalForm(delta.stretched(o.period)).expand(N); break;
      case OrbitKind::PositiveHyperbolic: z = z * RationalForm(delta.stretched(o.period)).inverse().expand(N); break;
      case OrbitKind::NegativeHyperbolic:
        z = z * RationalForm(delta.negated_variable().stretched(o.period)).inverse().expand(N);
        break;
    }
  }
  return z;
}

BundleSpec disk_bundle(const OrbitCatalog& catalog) {
  BundleSpec b;
  b.fiber_genus = 0;
  b.fiber_boundary = 1;
  b.h1y = catalog.h1;
  b.h1v = catalog.h1;
  b.proj = GroupHom::identity(catalog.h1);
  IntMatrix none(0, 0);
  MappingTorusH1 kl = mapping_torus_h1(none);
  for (auto& o : catalog.orbits) {
    Coords cls = catalog.h1->reduce(o.h1_class);
    IntMatrix m(catalog.h1->ncoords(), kl.group->ncoords());
    for (std::size_t r = 0; r < cls.size(); ++r) m(r, kl.mu_index) = cls[r];
    BundleOrbitData d{none, {RingMatrix::identity(kl.coker, 1), RingMatrix(kl.coker, 0)}, GroupHom(kl.group, catalog.h1, std::move(m)),
                      std::nullopt, std::make_shared<const MappingTorusH1>(kl)};
    b.orbits.emplace(o.label, std::move(d));
  }
  return b;
}

BundleOrbitData bundle_orbit_data(const IntMatrix& m1, std::vector<RingMatrix> lifts, const Coords& delta,
                                  const DirectSum& ds, const Coords& e_l, const IntMatrix& k_to_e) {
  return bundle_orbit_data(m1, std::make_shared<const MappingTorusH1>(mapping_torus_h1(m1)), std::move(lifts), delta, ds, e_l,
                           k_to_e);
}

BundleOrbitData bundle_orbit_data(const IntMatrix& m1, std::shared_ptr<const MappingTorusH1> h1, std::vector<RingMatrix> lifts,
                                  const Coords& delta, const DirectSum& ds, const Coords& e_l, const IntMatrix& k_to_e) {
  const MappingTorusH1& kl = *h1;
  const GroupPtr& Y = ds.proj1.target();
  const GroupPtr& E = ds.proj2.target();
  if (k_to_e.rows() != E->ncoords() || k_to_e.cols() != kl.coker->ncoords())
    throw PreconditionError("K -> E matrix has the wrong shape");
  IntMatrix a(Y->ncoords(), kl.group->ncoords()), e(E->ncoords(), kl.group->ncoords());
  Coords dl = Y->reduce(delta);
  for (std::size_t r = 0; r < dl.size(); ++r) a(r, kl.mu_index) = dl[r];
  for (std::size_t r = 0; r < E->ncoords(); ++r) {
    e(r, kl.mu_index) = e_l.at(r);
    for (std::size_t j = 0; j < kl.coker->ncoords(); ++j) e(r, j < kl.mu_index ? j : j + 1) = k_to_e(r, j);
  }
  IntMatrix m = ds.inj1.matrix() * a + ds.inj2.matrix() * e;
  GroupHom incl(kl.group, ds.group, std::move(m));
  return {m1, std::move(lifts), std::move(incl), std::nullopt, std::move(h1)};
}

BundleSpec torus_fiber_bundle(const OrbitCatalog& catalog, const GroupPtr& E,
                              const std::map<std::string, TorusFiberChoice>& choice) {
  BundleSpec b;
  b.fiber_genus = 1;
  b.fiber_boundary = 0;
  b.h1y = catalog.h1;
  DirectSum ds = direct_sum(catalog.h1, E);
  b.h1v = ds.group;
  b.proj = ds.proj1;
  for (auto& o : catalog.orbits) {
    auto it = choice.find(o.label);
    if (it == choice.end()) continue;
    const TorusFiberChoice& c = it->second;
    Cokernel ck = cokernel(IntMatrix::identity(2) - c.psi, 2);
    BundleOrbitData d = bundle_orbit_data(c.psi, torus_lifts(c.psi, ck), o.h1_class, ds, c.e_l, c.k_to_e);
    d.psi = c.psi;
    b.orbits.emplace(o.label, std::move(d));
  }
  return b;
}

}  // namespace bz
