#include "doctest.h"

#include "bundlezeta/series.hpp"
#include "../support/gen.hpp"

using namespace bz;

namespace {

GroupPtr Z0() { return trivial_group(); }

// integer coefficient list -> polynomial over the trivial group
Poly P(std::initializer_list<long> cs, GroupPtr g = trivial_group()) {
  std::vector<GroupRingElement> v;
  for (long c : cs) v.push_back(GroupRingElement::constant(g, c));
  return Poly(g, v);
}

std::vector<long> ints(const GradedSeries& s) {
  std::vector<long> v;
  for (int k = 0; k <= s.truncation(); ++k) {
    Rational c = s[k].coefficient({});
    REQUIRE(c.get_den() == 1);
    v.push_back(c.get_num().get_si());
  }
  return v;
}

GradedSeries log_series(int N, int sign_pattern) {
  // sum_{m>=1} e_m t^m / m with e_m = 1 or (-1)^{m+1}
  GradedSeries s(Z0(), N);
  for (int m = 1; m <= N; ++m) {
    int e = sign_pattern == 0 ? 1 : (m % 2 ? 1 : -1);
    s[m] = GroupRingElement::constant(Z0(), frac(e, m));
  }
  return s;
}

}  // namespace

TEST_CASE("series products") {
  auto geo = RationalForm(P({1}), P({1, -1})).expand(8);
  CHECK(ints(GradedSeries::from_poly(P({1, -1}), 8) * geo) == std::vector<long>{1, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(P({1, 1}) * P({1, 1}) == P({1, 2, 1}));

  // (1 - t_a t)(1 - t_{-a} t), a of order 2
  auto g = make_group(0, {2});
  auto ta = GroupRingElement::monomial(g, {1}), tma = GroupRingElement::monomial(g, {-1});
  Poly prod = Poly::one_minus(ta, 1) * Poly::one_minus(tma, 1);
  Poly expect(g, {GroupRingElement::one(g), ta * Rational(-2), GroupRingElement::one(g)});
  CHECK(prod == expect);
}

TEST_CASE("series exp examples") {
  CHECK(ints(log_series(6, 0).exp()) == std::vector<long>{1, 1, 1, 1, 1, 1, 1});
  CHECK(ints(log_series(6, 1).exp()) == std::vector<long>{1, 1, 0, 0, 0, 0, 0});
  CHECK(ints(GradedSeries(Z0(), 4).exp()) == std::vector<long>{1, 0, 0, 0, 0});
  CHECK_THROWS_AS(GradedSeries::one(Z0(), 3).exp(), PreconditionError);
}

TEST_CASE("series inverse examples") {
  CHECK(ints(GradedSeries::from_poly(P({1, -1}), 5).inverse()) == std::vector<long>{1, 1, 1, 1, 1, 1});
  CHECK(ints(GradedSeries::one(Z0(), 3).inverse()) == std::vector<long>{1, 0, 0, 0});
  CHECK(ints(GradedSeries::from_poly(P({1, 1, 1}), 4).inverse()) == std::vector<long>{1, -1, 0, 1, -1});
  CHECK_THROWS_AS(GradedSeries::from_poly(P({2, 1}), 4).inverse(), PreconditionError);
  // unit monomial constant term with a group element
  auto g = make_group(1);
  GradedSeries s(g, 3);
  s[0] = GroupRingElement::monomial(g, {2}, -1);
  s[1] = GroupRingElement::one(g);
  CHECK((s * s.inverse()) == GradedSeries::one(g, 3));
}

TEST_CASE("rational expansion examples") {
  CHECK(ints(RationalForm(P({1, -3, 1}), P({1, -2, 1})).expand(3)) == std::vector<long>{1, -1, -2, -3});
  CHECK(ints(RationalForm(P({1}), P({1})).expand(2)) == std::vector<long>{1, 0, 0});
  CHECK(ints(RationalForm(P({1, 1}), P({1, -1})).expand(2)) == std::vector<long>{1, 2, 2});
  CHECK_THROWS_AS(RationalForm(P({1}), P({3, 1})), PreconditionError);
  // common power of t cancels, a real pole does not
  CHECK(ints(RationalForm(P({0, 0, 1, 1}), P({0, 1, -1})).expand(3)) == std::vector<long>{0, 1, 2, 2});
  CHECK_THROWS_AS(RationalForm(P({1}), P({0, 1})), PreconditionError);
}

TEST_CASE("coefficient extraction") {
  CHECK(coefficient_of(RationalForm(P({1}), P({1, -1})).expand(6), {}, 5) == 1);
  CHECK(coefficient_of(GradedSeries::from_poly(P({1, 1}), 4), {}, 2) == 0);
  CHECK(coefficient_of(RationalForm(P({1, 1}), P({1, 0, 1})).expand(4), {}, 3) == -1);
  CHECK_THROWS_AS(coefficient_of(GradedSeries::one(Z0(), 2), {}, 3), PreconditionError);
}

TEST_CASE("specialize") {
  auto g = make_group(1);
  // 1 + t_a t  -> collapse to trivial group -> 1 + t
  Poly p(g, {GroupRingElement::one(g), GroupRingElement::monomial(g, {1})});
  auto collapse = GroupHom::zero(g, trivial_group());
  CHECK(specialize(p, collapse, TValue::Keep) == P({1, 1}));
  // t = 1 with the identity weight: allowed because weight == degree
  auto mu = GroupHom::identity(g);
  auto s1 = specialize(GradedSeries::from_poly(p, 3), GroupHom::identity(g), TValue::SetToOne, mu);
  CHECK(s1.weight_graded());
  CHECK(s1[1].coefficient({1}) == 1);
  // monomial carrying the wrong weight is rejected
  Poly bad(g, {GroupRingElement::one(g), GroupRingElement::monomial(g, {2})});
  CHECK_THROWS_AS(specialize(GradedSeries::from_poly(bad, 3), GroupHom::identity(g), TValue::SetToOne, mu),
                  PreconditionError);
}

TEST_CASE("exp/log round trips and homomorphism property") {
  gen::Rng r(17);
  for (int it = 0; it < 40; ++it) {
    auto g = gen::small_group(r);
    int N = static_cast<int>(r.range(1, 6));
    GradedSeries u = gen::random_series(r, g, N, true);
    GradedSeries one_plus = GradedSeries::one(g, N) + u;
    CHECK(one_plus.log().exp() == one_plus);
    CHECK(u.exp().log() == u);
    GradedSeries v = gen::random_series(r, g, N, true);
    CHECK((u + v).exp() == u.exp() * v.exp());
  }
}

TEST_CASE("rational expansion respects products") {
  gen::Rng r(23);
  for (int it = 0; it < 40; ++it) {
    auto g = gen::small_group(r);
    auto rp = [&](bool unit) {
      std::vector<GroupRingElement> c{unit ? GroupRingElement::monomial(g, gen::random_coords(r, g), r.coin() ? 1 : -1)
                                           : gen::random_element(r, g)};
      for (int k = 0; k < 3; ++k) c.push_back(gen::random_element(r, g));
      return Poly(g, c);
    };
    RationalForm a(rp(false), rp(true)), b(rp(false), rp(true));
    CHECK((a * b).expand(6) == a.expand(6) * b.expand(6));
  }
}

TEST_CASE("rendering") {
  CHECK(render(RationalForm(P({1, -3, 1}), P({1, -2, 1})).expand(3)) == "1 - t - 2 * t^2 - 3 * t^3 + O(t^4)");
  CHECK(render(RationalForm(P({1, -1, 1}), P({1, -1}))) == "(1 - t + t^2) / (1 - t)");
  auto g = make_group(1, {2});
  GroupRingElement x = GroupRingElement::monomial(g, {1, 1}, frac(-3, 2)) + GroupRingElement::one(g);
  CHECK(render(x) == "1 - 3/2 * t_(1,1)");
  RenderOptions one_var;
  one_var.single_variable = true;
  auto z = make_group(1);
  Poly q(z, {GroupRingElement::one(z) - GroupRingElement::monomial(z, {1}) + GroupRingElement::monomial(z, {2})}, true);
  CHECK(render(q, one_var) == "1 - t + t^2");
}
