#include "bundlezeta/random_data.hpp"

#include <numeric>

namespace bz::rnd {

IntMatrix random_unimodular(Rng& r, std::size_t n, int steps) {
  IntMatrix m = IntMatrix::identity(n);
  if (n < 2) return m;
  for (int s = 0; s < steps; ++s) {
    auto i = static_cast<std::size_t>(r.range(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(r.range(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    if (r.range(0, 4) == 0) {
      // signed swap keeps det = 1
      for (std::size_t c = 0; c < n; ++c) {
        Integer t = m(i, c);
        m(i, c) = m(j, c);
        m(j, c) = -t;
      }
    } else {
      long k = r.coin() ? r.range(1, 2) : -r.range(1, 2);
      for (std::size_t c = 0; c < n; ++c) m(i, c) += k * m(j, c);
    }
  }
  return m;
}

Coords random_element(Rng& r, const FGAbelianGroup& g) {
  Coords c(g.ncoords());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = g.modulus(i) ? r.range(0, g.modulus(i) - 1) : r.range(-2, 2);
  return c;
}

IntMatrix random_hom_matrix(Rng& r, const FGAbelianGroup& src, const FGAbelianGroup& dst) {
  IntMatrix m(dst.ncoords(), src.ncoords());
  for (std::size_t j = 0; j < src.ncoords(); ++j) {
    const std::int64_t d = src.modulus(j);
    for (std::size_t i = 0; i < dst.ncoords(); ++i) {
      const std::int64_t e = dst.modulus(i);
      if (d == 0) {
        m(i, j) = e ? r.range(0, e - 1) : r.range(-2, 2);
      } else if (e != 0) {
        std::int64_t step = e / std::gcd(d, e);
        m(i, j) = step * r.range(0, e / step - 1);
      }
    }
  }
  return m;
}

RingMatrix random_lift(Rng& r, const IntMatrix& m, const GroupPtr& K) {
  RingMatrix out(K, m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      GroupRingElement x(K);
      Integer rest = m(i, j);
      long extra = r.range(0, 1);
      for (long k = 0; k < extra; ++k) {
        long c = r.coin() ? r.range(1, 2) : -r.range(1, 2);
        x.add_term(K->reduce(random_element(r, *K)), Rational(c));
        rest -= c;
      }
      if (rest != 0 || x.is_zero()) x.add_term(K->reduce(random_element(r, *K)), Rational(rest));
      out(i, j) = x;
    }
  return out;
}

GroupPtr random_extra_group(Rng& r) {
  switch (r.range(0, 4)) {
    case 0: return trivial_group();
    case 1: return make_group(0, {2});
    case 2: return make_group(0, {3});
    case 3: return make_group(0, {2, 2});
    default: return make_group(1);
  }
}

namespace {

RingMatrix unit_monomial(Rng& r, const GroupPtr& K) {
  RingMatrix m(K, 1);
  m(0, 0) = GroupRingElement::monomial(K, K->reduce(random_element(r, *K)));
  return m;
}

}  // namespace

BundleSpec random_bundle(Rng& r, const OrbitCatalog& catalog, int N, int gmin, int gmax) {
  BundleSpec b;
  b.fiber_genus = static_cast<int>(r.range(gmin, gmax));
  b.fiber_boundary = 0;
  b.h1y = catalog.h1;
  GroupPtr E = random_extra_group(r);
  DirectSum ds = direct_sum(catalog.h1, E);
  b.h1v = ds.group;
  b.proj = ds.proj1;
  const auto n = static_cast<std::size_t>(2 * b.fiber_genus);
  for (auto& o : catalog.orbits) {
    if (o.period > N) continue;
    IntMatrix m1 = random_unimodular(r, n, static_cast<int>(n) + 2);
    auto kl = std::make_shared<const MappingTorusH1>(mapping_torus_h1(m1));
    GroupPtr K = kl->coker;
    std::vector<RingMatrix> lifts{unit_monomial(r, K), random_lift(r, m1, K), unit_monomial(r, K)};
    IntMatrix k_to_e = random_hom_matrix(r, *K, *E);
    Coords e_l = random_element(r, *E);
    b.orbits.emplace(o.label, bundle_orbit_data(m1, kl, std::move(lifts), o.h1_class, ds, e_l, k_to_e));
  }
  return b;
}

BundleSpec random_torus_bundle(Rng& r, const OrbitCatalog& catalog, int N) {
  static const std::vector<IntMatrix> psis = {IntMatrix{{2, 1}, {1, 1}}, IntMatrix{{1, 1}, {1, 2}},
                                              IntMatrix{{-2, -1}, {-1, -1}}, IntMatrix{{3, 1}, {2, 1}},
                                              IntMatrix{{1, -1}, {-1, 2}}, IntMatrix{{0, 1}, {-1, -3}}};
  GroupPtr E = random_extra_group(r);
  std::map<std::string, TorusFiberChoice> choice;
  for (auto& o : catalog.orbits) {
    if (o.period > N) continue;
    const IntMatrix& psi = r.pick(psis);
    GroupPtr K = mapping_torus_h1(psi).coker;
    choice[o.label] = {psi, random_element(r, *E), random_hom_matrix(r, *K, *E)};
  }
  return torus_fiber_bundle(catalog, E, choice);
}

Poly random_unit_poly(Rng& r, const GroupPtr& g, int deg, int terms) {
  std::vector<GroupRingElement> c(static_cast<std::size_t>(deg + 1), GroupRingElement(g));
  c[0] = GroupRingElement::one(g);
  for (int k = 0; k < terms; ++k) {
    auto d = static_cast<std::size_t>(r.range(1, deg));
    long v = r.coin() ? r.range(1, 3) : -r.range(1, 3);
    c[d].add_term(g->reduce(random_element(r, *g)), Rational(v));
  }
  return Poly(g, std::move(c), true);
}

RationalForm random_series(Rng& r, const GroupPtr& g, int deg) {
  return RationalForm(random_unit_poly(r, g, deg, static_cast<int>(r.range(1, 3))),
                      random_unit_poly(r, g, deg, static_cast<int>(r.range(0, 3))));
}

}  // namespace bz::rnd
