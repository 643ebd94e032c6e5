#include "doctest.h"

#include "bundlezeta/ring_matrix.hpp"
#include "../support/gen.hpp"

using namespace bz;

namespace {

// Laplace expansion along the first row; the oracle for the Berkowitz route.
GroupRingElement det_cofactor(const RingMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return GroupRingElement::one(m.group());
  if (n == 1) return m(0, 0);
  GroupRingElement d(m.group());
  for (std::size_t j = 0; j < n; ++j) {
    RingMatrix minor(m.group(), n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    GroupRingElement term = m(0, j) * det_cofactor(minor);
    if (j % 2) d -= term; else d += term;
  }
  return d;
}

RingMatrix random_matrix(gen::Rng& r, const GroupPtr& g, std::size_t n) {
  RingMatrix m(g, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gen::random_element(r, g, 2);
  return m;
}

Poly ints(std::initializer_list<long> cs) {
  std::vector<GroupRingElement> v;
  for (long c : cs) v.push_back(GroupRingElement::constant(trivial_group(), c));
  return Poly(trivial_group(), v);
}

}  // namespace

TEST_CASE("determinant examples") {
  auto z0 = trivial_group();
  CHECK(det_divfree(RingMatrix::identity(z0, 3)).is_one());
  CHECK(det_divfree(RingMatrix::from_int(z0, IntMatrix{{2, 1}, {1, 1}})).is_one());
  auto z = make_group(1);
  auto one = GroupRingElement::one(z), ta = GroupRingElement::monomial(z, {1});
  RingMatrix m(z, 2);
  m(0, 0) = one - ta, m(0, 1) = ta, m(1, 0) = ta, m(1, 1) = one;
  CHECK(det_divfree(m) == one - ta - GroupRingElement::monomial(z, {2}));
  CHECK(det_divfree(RingMatrix(z0, 0)).is_one());
}

TEST_CASE("char series examples") {
  auto z0 = trivial_group();
  CHECK(char_series(RingMatrix::from_int(z0, IntMatrix{{2, 1}, {1, 1}})) == ints({1, -3, 1}));
  CHECK(char_series(RingMatrix::identity(z0, 1)) == ints({1, -1}));
  CHECK(char_series(RingMatrix::from_int(z0, IntMatrix{{1, -1}, {1, 0}})) == ints({1, -1, 1}));
}

TEST_CASE("powers and traces") {
  auto z0 = trivial_group();
  auto A = RingMatrix::from_int(z0, IntMatrix{{2, 1}, {1, 1}});
  CHECK(A.power(2) == RingMatrix::from_int(z0, IntMatrix{{5, 3}, {3, 2}}));
  CHECK(A.power(2).trace() == GroupRingElement::constant(z0, 7));
  CHECK(A.power(0) == RingMatrix::identity(z0, 2));
  CHECK(RingMatrix::identity(z0, 3).trace() == GroupRingElement::constant(z0, 3));
}

TEST_CASE("berkowitz agrees with cofactor expansion and is multiplicative") {
  gen::Rng r(29);
  auto g = make_group(1, {2});
  for (int it = 0; it < 60; ++it) {
    auto n = static_cast<std::size_t>(r.range(1, 4));
    RingMatrix a = random_matrix(r, g, n), b = random_matrix(r, g, n);
    CHECK(det_divfree(a) == det_cofactor(a));
    CHECK(det_divfree(a * b) == det_divfree(a) * det_divfree(b));
  }
}

TEST_CASE("exp of the trace series inverts det(1 - tM)") {
  gen::Rng r(31);
  for (int it = 0; it < 20; ++it) {
    auto g = gen::small_group(r);
    auto n = static_cast<std::size_t>(r.range(1, 3));
    RingMatrix m = random_matrix(r, g, n);
    const int N = 5;
    GradedSeries s(g, N);
    RingMatrix p = RingMatrix::identity(g, n);
    for (int k = 1; k <= N; ++k) {
      p = p * m;
      s[k] = p.trace() * frac(1, k);
    }
    GradedSeries d = GradedSeries::from_poly(char_series(m), N);
    CHECK(s.exp() * d == GradedSeries::one(g, N));
    CHECK(char_series(m).coeff(0).is_one());
  }
}

TEST_CASE("truncated characteristic series keeps the low coefficients") {
  gen::Rng r(37);
  for (int it = 0; it < 30; ++it) {
    auto g = gen::small_group(r);
    auto n = static_cast<std::size_t>(r.range(0, 5));
    RingMatrix m = random_matrix(r, g, n);
    Poly full = char_series(m);
    for (int k = 0; k <= static_cast<int>(n) + 1; ++k) {
      Poly t = char_series(m, k);
      CHECK(t.degree() <= k);
      for (int j = 0; j <= k; ++j) CHECK(t.coeff(j) == full.coeff(j));
    }
  }
}
