#include "doctest.h"

#include "bundlezeta/random_data.hpp"
#include "bundlezeta/wall_crossing.hpp"
#include "gen.hpp"

using namespace bz;

namespace {

ClassLattice lattice(std::size_t r, IntMatrix Q, std::vector<Integer> c1, std::vector<long> w) {
  GroupPtr g = make_group(r);
  IntMatrix wm(1, r);
  for (std::size_t i = 0; i < r; ++i) wm(0, i) = w[i];
  return {g, std::move(Q), std::move(c1), GroupHom(g, make_group(1), wm)};
}

CurveRecord torus(const std::string& label, Coords cls, int sign, std::set<int> I = {}) {
  CurveRecord c;
  c.label = label;
  c.cls = std::move(cls);
  c.sign = sign;
  c.torus_type = TorusType{sign, std::move(I)};
  return c;
}

CurveRecord sphere(const std::string& label, Coords cls, int sign) {
  CurveRecord c;
  c.label = label;
  c.cls = std::move(cls);
  c.sign = sign;
  return c;
}

// z in the trivial group, as a polynomial in t
Poly zpoly(std::vector<long> c) {
  GroupPtr g = trivial_group();
  std::vector<GroupRingElement> v;
  for (long x : c) v.push_back(GroupRingElement::constant(g, x));
  return Poly(g, v);
}

// 1/(1 - t_{k C}) at weight k w
RationalForm geometric(const GroupPtr& g, const Coords& C, int k, int w) {
  return RationalForm(Poly::one(g, true), Poly::one_minus(GroupRingElement::monomial(g, g->scale(C, k)), k * w, true));
}

}  // namespace

TEST_CASE("class invariants and classification") {
  ClassLattice lat = lattice(3, IntMatrix{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}, {0, 2, 3}, {1, 1, 1});
  auto a = class_invariants(lat, {1, 0, 0});
  CHECK(a.g == 1);
  CHECK(a.d == 0);
  CHECK(a.kind == ClassKind::T2);
  auto b = class_invariants(lat, {0, 1, 0});
  CHECK(b.g == 0);
  CHECK(b.d == 2);
  CHECK(b.kind == ClassKind::S2);
  auto c = class_invariants(lat, {0, 0, 1});
  CHECK(c.g == 0);
  CHECK(c.d == 4);
  CHECK(c.kind == ClassKind::Other);

  ClassLattice odd = lattice(1, IntMatrix{{0}}, {1}, {1});
  CHECK_THROWS_AS(class_invariants(odd, {1}), PreconditionError);
  ClassLattice asym = lattice(2, IntMatrix{{0, 1}, {0, 0}}, {0, 0}, {1, 1});
  CHECK_THROWS_AS(asym.check(), PreconditionError);
}

TEST_CASE("multiply toroidal classes and roots") {
  ClassLattice lat = lattice(1, IntMatrix{{0}}, {0}, {1});
  CHECK_FALSE(multiply_toroidal(lat, {1}));
  CHECK(multiply_toroidal(lat, {2}));
  CHECK(toroidal_root(lat, {6}).root == Coords{1});
  CHECK(toroidal_root(lat, {6}).multiple == 6);

  // Z + Z/3: (2, 1) = 2 (1, 2), so the root carries the torsion solution 2
  GroupPtr g = make_group(1, {3});
  ClassLattice tl{g, IntMatrix{{0}}, {0}, GroupHom(g, make_group(1), IntMatrix{{1, 0}})};
  Root r = toroidal_root(tl, {2, 1});
  CHECK(r.multiple == 2);
  CHECK(r.root == Coords{1, 2});
  CHECK(toroidal_root(tl, {3, 1}).multiple == 1);  // 3 x = 1 has no solution mod 3
}

TEST_CASE("decompositions D(A)") {
  ClassLattice lat = lattice(1, IntMatrix{{0}}, {0}, {1});
  auto d1 = decompositions(lat, {{1}}, {1});
  REQUIRE(d1.size() == 1);
  CHECK(d1[0] == Decomposition{{{1}, 1}});
  auto d2 = decompositions(lat, {{1}}, {2});
  REQUIRE(d2.size() == 1);
  CHECK(d2[0] == Decomposition{{{1}, 2}});
  // 2 is multiply toroidal, so A = 4 from {2} has no decomposition
  CHECK(decompositions(lat, {{2}}, {4}).empty());

  // e1, e2 spheres meeting once: never in one decomposition
  ClassLattice hyp = lattice(2, IntMatrix{{0, 1}, {1, 0}}, {2, 2}, {1, 1});
  CHECK(decompositions(hyp, {{1, 0}, {0, 1}}, {1, 1}).empty());
  CHECK(decompositions(hyp, {{1, 0}, {0, 1}, {1, 1}}, {1, 1}).size() == 1);
  // A.A != 0 forces n = 1
  ClassLattice pos = lattice(1, IntMatrix{{1}}, {3}, {1});
  CHECK(decompositions(pos, {{1}}, {2}).empty());
  // negative d is dropped
  ClassLattice neg = lattice(1, IntMatrix{{-2}}, {0}, {1});
  CHECK(decompositions(neg, {{1}}, {1}).empty());
}

TEST_CASE("Taubes generating functions") {
  CHECK(taubes_p(1, 1).equals(RationalForm(zpoly({1, 1}))));
  CHECK(taubes_p(-1, 0).equals(RationalForm(zpoly({1, -1}))));
  CHECK(taubes_p(1, 0).equals(RationalForm(zpoly({1}), zpoly({1, -1}))));
  GradedSeries s = taubes_p(1, 2).expand(3);
  CHECK(s == RationalForm(zpoly({1, 1, -1, -1})).expand(3));
  for (int sign : {1, -1})
    for (int k = 0; k <= 3; ++k) CHECK(r_coeff(taubes_p(sign, k), 1) == sign);
  // the rows of the local zeta table
  GroupRingElement z = GroupRingElement::one(trivial_group());
  CHECK(taubes_p(1, 0).equals(local_zeta(OrbitKind::Elliptic, z, 1)));
  CHECK(taubes_p(-1, 0).equals(local_zeta(OrbitKind::PositiveHyperbolic, z, 1)));
  CHECK(taubes_p(1, 1).equals(local_zeta(OrbitKind::NegativeHyperbolic, z, 1)));
  CHECK_THROWS_AS(taubes_p(1, 4), PreconditionError);
}

TEST_CASE("Qu and Ru") {
  ClassLattice lat = lattice(1, IntMatrix{{0}}, {0}, {1});
  CHECK(qu(lat, {torus("a", {1}, 1)}, {1}, 2) == 1);
  CHECK(qu(lat, {torus("a", {1}, 1, {2})}, {1}, 2) == 0);
  CHECK(qu(lat, {torus("a", {1}, 1), torus("b", {1}, -1)}, {1}, 1) == 0);
  // a torus in 2A feeds Qu(A, 2) through r(C, 1)
  CHECK(qu(lat, {torus("a", {2}, -1)}, {1}, 2) == -1);
  CHECK_THROWS_AS(qu(lat, {}, {2}, 1), PreconditionError);

  CHECK(ruan({sphere("a", {1}, 1), sphere("b", {1}, -1)}, {1}) == 0);
  CHECK(ruan({sphere("a", {1}, 1), sphere("b", {1}, 1)}, {1}) == 2);

  GroupPtr g = make_group(1);
  TwistRing ring{g, GroupHom::identity(g), GroupHom::identity(g)};
  CurveRecord c = sphere("a", {1}, 1);
  c.gt_w = GroupRingElement::one(g) + GroupRingElement::monomial(g, {1});
  CHECK(ruan_pi(ring, {c}, {1}) == *c.gt_w);
  CurveRecord d = c;
  d.sign = -1;
  CHECK(ruan_pi(ring, {c, d}, {1}).is_zero());
  CHECK_THROWS_AS(ruan_pi(ring, {sphere("x", {1}, 1)}, {1}), PreconditionError);
}

TEST_CASE("curve records are validated") {
  ClassLattice lat = lattice(2, IntMatrix{{0, 0}, {0, 0}}, {0, 2}, {1, 1});
  CHECK_NOTHROW(check_curves(lat, {torus("t", {1, 0}, 1), sphere("s", {0, 1}, 1)}));
  CHECK_THROWS_AS(check_curves(lat, {sphere("t", {1, 0}, 1)}), PreconditionError);
  CHECK_THROWS_AS(check_curves(lat, {torus("s", {0, 1}, 1)}), PreconditionError);
  CurveRecord bad = torus("t", {1, 0}, 1);
  bad.torus_type->sign = -1;
  CHECK_THROWS_AS(check_curves(lat, {bad}), PreconditionError);
  CHECK_THROWS_AS(check_curves(lat, {torus("t", {1, 0}, 1, {4})}), PreconditionError);
  CHECK_THROWS_AS(check_curves(lat, {torus("t", {-1, 0}, 1)}), PreconditionError);  // weight
}

TEST_CASE("P_pi four cases") {
  GroupPtr g = make_group(1);
  Coords C{1};
  CurveSeries ones{RationalForm::one(g, true), {}};
  for (int i = 1; i <= 4; ++i) ones.covers.emplace(i, RationalForm::one(g, true));
  CurveSeries unit{geometric(g, C, 1, 1), {}};
  for (int i = 1; i <= 3; ++i) unit.covers.emplace(i, geometric(g, C, 2, 1));
  unit.covers.emplace(4, geometric(g, C, 4, 1));
  for (int sign : {1, -1})
    for (int mask = 0; mask < 8; ++mask) {
      std::set<int> I;
      for (int i = 1; i <= 3; ++i)
        if (mask & (1 << (i - 1))) I.insert(i);
      CurveRecord c = torus("c", C, sign, I);
      c.series = ones;
      CHECK(p_pi(c).equals(RationalForm::one(g, true)));
      // trivial-bundle series recover P_{sign, |I|}
      c.series = unit;
      RationalForm t = taubes_p(sign, static_cast<int>(I.size()));
      // t_C has weight one: coefficient k of P sits on t_{kC}
      GradedSeries lhs = p_pi(c).expand(8);
      GradedSeries rhs = t.expand(8);
      for (int k = 0; k <= 8; ++k) CHECK(lhs[k].coefficient({k}) == rhs[k].coefficient({}));
    }
  CurveRecord missing = torus("m", C, 1, {1, 2});
  CurveSeries partial = unit;
  partial.covers.erase(4);
  missing.series = partial;
  CHECK_THROWS_AS(p_pi(missing), PreconditionError);
}

TEST_CASE("double covers compose to the 4-fold cover") {
  CHECK(cover_class(1).matrix == (IntMatrix{{2, 0}, {0, 1}}));
  CHECK(cover_class(2).matrix == (IntMatrix{{1, 0}, {0, 2}}));
  CHECK(cover_class(3).matrix == (IntMatrix{{1, -1}, {1, 1}}));
  CHECK(iota_pullback(1, 3) == 2);
  CHECK(iota_pullback(1, 2) == 2);
  CHECK(iota_pullback(3, 1) == 3);
  const IntMatrix two{{2, 0}, {0, 2}};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) {
        CHECK_THROWS_AS(iota_compose(i, j), PreconditionError);
        continue;
      }
      CoverClass c = iota_compose(i, j);
      CHECK(c.which == 4);
      CHECK(c.matrix == two);
      CHECK(iota_compose(j, i).matrix == c.matrix);
    }
  // the raw composite for (3, 1) is a rotation of 2I; only its lattice is 2 Z^2
  CHECK(cover_class(3).matrix * cover_class(3).matrix == (IntMatrix{{0, -2}, {2, 0}}));
}

TEST_CASE("GT assembly on hand-computed lattices") {
  // e1 a sphere class (d = 2), e2 a torus class
  ClassLattice lat = lattice(2, IntMatrix{{0, 0}, {0, 0}}, {2, 0}, {1, 1});
  std::vector<CurveRecord> curves{sphere("s", {1, 0}, 1), torus("t", {0, 1}, 1)};
  CHECK(gt_class(lat, curves, {1, 0}) == 1);
  CHECK(gt_class(lat, curves, {2, 0}) == 6);  // 4! * 1 / (2! 2!)
  CHECK(gt_class(lat, curves, {1, 1}) == 1);
  CHECK(gt_class(lat, curves, {0, 3}) == 1);
  CHECK(gt_class(lat, curves, {2, 2}) == 6);
  GradedSeries s = gt(lat, curves, 3);
  CHECK(s[0].is_one());
  CHECK(s[2].coefficient({2, 0}) == 6);
  CHECK(s[2].coefficient({1, 1}) == 1);
  CHECK(s[2].coefficient({0, 2}) == 1);
  // printed coefficient d_A! Ru^n / (d_{A_i}! n!) = 6! / (2! 3!)
  CHECK(s[3].coefficient({3, 0}) == frac(720, 12));

  // spheres meeting once do not combine
  ClassLattice hyp = lattice(2, IntMatrix{{0, 1}, {1, 0}}, {2, 2}, {1, 1});
  CHECK(gt_class(hyp, {sphere("a", {1, 0}, 1), sphere("b", {0, 1}, 1)}, {1, 1}) == 0);

  // one torus of type (+, 0) in the generator: every multiple counts once
  ClassLattice line = lattice(1, IntMatrix{{0}}, {0}, {1});
  GradedSeries g1 = gt(line, {torus("t", {1}, 1)}, 5);
  for (int k = 0; k <= 5; ++k) CHECK(g1[k].coefficient({k}) == 1);
  // multiplicity is a power of P
  CurveRecord two = torus("t", {1}, -1);
  two.count = 2;
  GradedSeries g2 = gt(line, {two}, 3);
  CHECK(g2[1].coefficient({1}) == -2);
  CHECK(g2[2].coefficient({2}) == 1);
  CHECK(g2[3].is_zero());
}

TEST_CASE("trivial twisting degrades GT_pi to GT") {
  gen::Rng r(11);
  ClassLattice lat = lattice(2, IntMatrix{{0, 0}, {0, 0}}, {2, 0}, {1, 2});
  const GroupPtr& g = lat.group;
  TwistRing ring{g, GroupHom::identity(g), GroupHom::identity(g)};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<CurveRecord> plain, twisted;
    int n = static_cast<int>(r.range(1, 4));
    for (int i = 0; i < n; ++i) {
      int sign = r.coin() ? 1 : -1;
      if (r.coin()) {
        Coords cls{r.range(1, 2), 0};
        CurveRecord c = sphere("s" + std::to_string(i), cls, sign);
        plain.push_back(c);
        c.gt_w = GroupRingElement::one(g);
        twisted.push_back(c);
      } else {
        Coords cls{0, r.range(1, 2)};
        std::set<int> I;
        for (int k = 1; k <= 3; ++k)
          if (r.coin()) I.insert(k);
        CurveRecord c = torus("t" + std::to_string(i), cls, sign, I);
        plain.push_back(c);
        CurveSeries u{geometric(g, cls, 1, 2 * static_cast<int>(cls[1])), {}};
        for (int k = 1; k <= 3; ++k) u.covers.emplace(k, geometric(g, cls, 2, 2 * static_cast<int>(cls[1])));
        u.covers.emplace(4, geometric(g, cls, 4, 2 * static_cast<int>(cls[1])));
        c.series = u;
        twisted.push_back(c);
      }
    }
    CHECK(gt_pi(lat, ring, twisted, 6) == gt(lat, plain, 6));
  }
}

TEST_CASE("product mode: plain GT equals the total-Abelian zeta at t = 1") {
  for (const IntMatrix& A : {IntMatrix{{2, 1}, {1, 1}}, IntMatrix{{4, 1}, {3, 1}}, IntMatrix{{-2, -1}, {-1, -1}}}) {
    const int N = 6;
    OrbitCensus census = torus_orbit_census(A, N);
    ProductMode pm = product_mode(census);
    for (auto& c : pm.curves) CHECK(c.torus_type.has_value());
    GradedSeries lhs = gt(pm.lat, pm.curves, N);
    MonodromySpec spec = torus_monodromy(A);
    GradedSeries z = zeta_det_route(spec, ZetaVariant::TotalAbelian).expand(N);
    TotalAbelianData d = total_abelian_matrices(spec);
    GradedSeries rhs = specialize(z, GroupHom::identity(z.group()), TValue::SetToOne, d.h1.mu_weight);
    CHECK(lhs == rhs);
  }
  CHECK(product_mode_type(OrbitKind::Elliptic).sign == 1);
  CHECK(product_mode_type(OrbitKind::PositiveHyperbolic).sign == -1);
  CHECK(product_mode_type(OrbitKind::NegativeHyperbolic).I == std::set<int>{2});
}

TEST_CASE("product mode: GT_pi equals the pi-twisted zeta at t = 1") {
  const int N = 4;
  for (const IntMatrix& A : {IntMatrix{{2, 1}, {1, 1}}, IntMatrix{{-2, -1}, {-1, -1}}}) {
    OrbitCatalog cat = enumerate_torus_orbits(A, N);
    rnd::Rng r(5);
    for (int trial = 0; trial < 2; ++trial) {
      BundleSpec b = trial ? rnd::random_torus_bundle(r, cat, N) : rnd::random_bundle(r, cat, N, 1, 1);
      ProductMode pm = product_mode(cat, b, N);
      REQUIRE(pm.ring.has_value());
      GradedSeries lhs = gt_pi(pm.lat, *pm.ring, pm.curves, N);
      GradedSeries z = pi_twisted_zeta(cat, b, N);
      GroupHom mu = cat.mu_weight().after(pm.ring->to_x);
      CHECK(lhs == specialize(z, GroupHom::identity(z.group()), TValue::SetToOne, mu));
    }
  }
}

TEST_CASE("product mode over the disk bundle reduces to plain GT") {
  const int N = 5;
  IntMatrix A{{2, 1}, {1, 1}};
  OrbitCatalog cat = enumerate_torus_orbits(A, N);
  BundleSpec b = disk_bundle(cat);
  ProductMode tw = product_mode(cat, b, N);
  ProductMode pl = product_mode(OrbitCensus::of(cat));
  GradedSeries twisted = gt_pi(tw.lat, *tw.ring, tw.curves, N).pushforward(tw.ring->to_x);
  CHECK(twisted == gt(pl.lat, pl.curves, N));
}

TEST_CASE("power lifts of a torus fiber: same torsion as the cellular lift of psi^k") {
  // the chain matrices are different cellular approximations; only the alternating product is canonical
  auto torsion = [](const std::vector<RingMatrix>& m) {
    Poly num = Poly::one(m[0].group()), den = num;
    for (std::size_t i = 0; i < m.size(); ++i) {
      Poly c = char_series(m[i]);
      if (i % 2) num = num * c; else den = den * c;
    }
    return RationalForm(num, den);
  };
  for (const IntMatrix& p : {IntMatrix{{2, 1}, {1, 1}}, IntMatrix{{3, 1}, {2, 1}}, IntMatrix{{-2, -1}, {-1, -1}}}) {
    Cokernel ck1 = cokernel(IntMatrix::identity(2) - p, 2);
    auto m1 = torus_lifts(p, ck1);
    for (unsigned k = 2; k <= 3; ++k) {
      IntMatrix pk = p.power(k);
      Cokernel ckk = cokernel(IntMatrix::identity(2) - pk, 2);
      GroupHom down(ckk.group, ck1.group, ck1.projection.matrix() * ckk.section);
      std::vector<RingMatrix> pushed, powered;
      for (auto& m : torus_lifts(pk, ckk)) pushed.push_back(m.pushforward(down));
      for (auto& m : m1) powered.push_back(m.power(k));
      CHECK(torsion(pushed).equals(torsion(powered)));
    }
  }
}

TEST_CASE("wall crossing") {
  WallCrossingReport rep = wall_crossing_suite(7, 8);
  CHECK(rep.cases.size() == 64);
  for (auto& c : rep.cases) {
    INFO(c.label << " " << c.detail);
    CHECK(c.ok);
  }
  // the sign rules for C-bar, case I = {} along 1: C_+ = (+,{1}), C-bar = (+,{})
  TorusType bar = bifurcation_bar_type(1, {}, 1);
  CHECK(bar.sign == 1);
  CHECK(bar.I.empty());
  CHECK(bifurcation_plus_type(1, {}, 1).I == std::set<int>{1});
  // I = {2} along 1: the hat cover of C-bar turns negative
  TorusType bar2 = bifurcation_bar_type(1, {2}, 1);
  CHECK(bar2.sign == 1);
  CHECK(bar2.I == std::set<int>{2});

  // a wrong sign for C-bar is caught
  rnd::Rng r(3);
  GroupPtr g = make_group(1);
  CurveSeries s{rnd::random_series(r, g, 6), {}};
  for (int i = 1; i <= 4; ++i) s.covers.emplace(i, rnd::random_series(r, g, 6));
  CurveRecord plus, wrong, minus;
  plus.label = "p", plus.sign = 1, plus.torus_type = TorusType{1, {1}}, plus.series = s;
  wrong.label = "w", wrong.sign = -1, wrong.torus_type = TorusType{-1, {}}, wrong.series = CurveSeries{s.covers.at(1), {}};
  minus.label = "m", minus.sign = 1, minus.torus_type = TorusType{1, {}}, minus.series = s;
  CHECK_FALSE((p_pi(plus) * p_pi(wrong)).equals(p_pi(minus)));
}
