#include "doctest.h"

#include "bundlezeta/zeta.hpp"
#include "../support/gen.hpp"

using namespace bz;

namespace {

Poly ints(std::initializer_list<long> cs) {
  std::vector<GroupRingElement> v;
  for (long c : cs) v.push_back(GroupRingElement::constant(trivial_group(), c));
  return Poly(trivial_group(), v);
}

}  // namespace

TEST_CASE("local zeta closed forms") {
  auto z0 = trivial_group();
  auto one = GroupRingElement::one(z0);
  CHECK(local_zeta(OrbitKind::Elliptic, one, 1).equals(RationalForm(ints({1}), ints({1, -1}))));
  CHECK(local_zeta(OrbitKind::NegativeHyperbolic, one, 1).equals(RationalForm(ints({1, 1}))));
  auto g = make_group(1);
  auto ta = GroupRingElement::monomial(g, {1});
  auto r = local_zeta(OrbitKind::PositiveHyperbolic, ta, 2);
  CHECK(r.num() == Poly::one(g) - Poly::monomial(ta, 2));
}

TEST_CASE("orbit route small cases") {
  OrbitCatalog empty{make_group(1), 0, {}};
  CHECK(zeta_orbit_route(empty, 4, ZetaVariant::Plain) == GradedSeries::one(trivial_group(), 4));
  OrbitCatalog one{make_group(1), 0, {{"e", 1, OrbitKind::Elliptic, {1}}}};
  CHECK(zeta_orbit_route(one, 3, ZetaVariant::Plain) == RationalForm(ints({1}), ints({1, -1})).expand(3));
  // catalog whose class disagrees with its period is rejected
  OrbitCatalog bad{make_group(1), 0, {{"e", 2, OrbitKind::Elliptic, {1}}}};
  CHECK_THROWS_AS(zeta_orbit_route(bad, 3, ZetaVariant::Plain), PreconditionError);
}

TEST_CASE("determinant route examples") {
  auto cat = zeta_det_route(MonodromySpec::closed(IntMatrix{{2, 1}, {1, 1}}), ZetaVariant::Plain);
  CHECK(cat.equals(RationalForm(ints({1, -3, 1}), ints({1, -2, 1}))));
  auto tre = zeta_det_route(MonodromySpec::bordered(IntMatrix{{1, -1}, {1, 0}}, 1, 1), ZetaVariant::Plain);
  CHECK(tre.equals(RationalForm(ints({1, -1, 1}), ints({1, -1}))));
  auto id = zeta_det_route(MonodromySpec::closed(IntMatrix::identity(2)), ZetaVariant::Plain);
  CHECK(id.expand(6) == GradedSeries::one(trivial_group(), 6));
}

TEST_CASE("orbit route equals determinant route and exp route") {
  const std::vector<IntMatrix> corpus = {IntMatrix{{2, 1}, {1, 1}}, IntMatrix{{3, 1}, {2, 1}}, IntMatrix{{1, 1}, {1, 2}},
                                         IntMatrix{{4, 1}, {3, 1}}, IntMatrix{{-2, -1}, {-1, -1}}, IntMatrix{{5, 2}, {2, 1}}};
  const int N = 6;
  for (auto& A : corpus) {
    auto census = torus_orbit_census(A, N);
    auto spec = torus_monodromy(A);
    for (auto v : {ZetaVariant::Plain, ZetaVariant::TotalAbelian}) {
      auto orbit = zeta_orbit_route(census, N, v);
      CHECK(orbit == zeta_det_route(spec, v).expand(N));
      CHECK(orbit == zeta_exp_route(spec, N, v));
    }
  }
}

TEST_CASE("alexander polynomials") {
  auto tre = alexander_polynomial(1, MonodromySpec::bordered(IntMatrix{{1, -1}, {1, 0}}, 1, 1));
  auto h1 = mapping_torus_h1(IntMatrix{{1, -1}, {1, 0}});
  auto t1 = specialize(tre, GroupHom::identity(h1.group), TValue::SetToOne, h1.mu_weight);
  auto g = h1.group;
  Poly expect(g, {GroupRingElement::one(g), GroupRingElement::monomial(g, {-1}) * Rational(0) - GroupRingElement::monomial(g, {1}),
                  GroupRingElement::monomial(g, {2})}, true);
  CHECK(t1 == expect);
  auto d0 = alexander_polynomial(0, MonodromySpec::bordered(IntMatrix{{1, -1}, {1, 0}}, 1, 1));
  CHECK(d0 == Poly::one_minus(GroupRingElement::monomial(g, {1}), 1));
}

TEST_CASE("twisted local zeta: closed forms match the trace route") {
  gen::Rng r(41);
  for (int it = 0; it < 30; ++it) {
    auto g = gen::small_group(r);
    auto n = static_cast<std::size_t>(r.range(0, 3));
    RingMatrix rho(g, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rho(i, j) = gen::random_element(r, g, 2);
    int p = static_cast<int>(r.range(1, 3));
    for (auto k : {OrbitKind::Elliptic, OrbitKind::PositiveHyperbolic, OrbitKind::NegativeHyperbolic})
      CHECK(twisted_local_zeta(k, rho, p).expand(7) == twisted_local_zeta_trace(k, rho, p, 7));
  }
  auto z0 = trivial_group();
  CHECK(twisted_local_zeta(OrbitKind::PositiveHyperbolic, RingMatrix::from_int(z0, IntMatrix{{2, 1}, {1, 1}}), 1)
            .equals(RationalForm(ints({1, -3, 1}))));
  CHECK(twisted_local_zeta(OrbitKind::NegativeHyperbolic, RingMatrix::identity(z0, 1), 1).equals(RationalForm(ints({1, 1}))));
}

TEST_CASE("twisted zeta: trivial and empty representations") {
  IntMatrix A{{2, 1}, {1, 1}};
  auto cat = enumerate_torus_orbits(A, 6);
  RepresentationAssignment triv{trivial_group(), {}}, empty{trivial_group(), {}};
  for (auto& o : cat.orbits) {
    triv.rho[o.label] = RingMatrix::identity(trivial_group(), 1);
    empty.rho[o.label] = RingMatrix(trivial_group(), 0);
  }
  CHECK(twisted_zeta(cat, triv, 6, true) == zeta_orbit_route(cat, 6, ZetaVariant::Plain));
  CHECK(twisted_zeta(cat, empty, 6, true) == GradedSeries::one(trivial_group(), 6));
  // rho_delta = A^period: integral, and the closed forms are checked on every orbit
  RepresentationAssignment pw{trivial_group(), {}};
  for (auto& o : cat.orbits) pw.rho[o.label] = RingMatrix::from_int(trivial_group(), A.power(static_cast<unsigned>(o.period)));
  CHECK(twisted_zeta(cat, pw, 6, true).is_integral());
}
