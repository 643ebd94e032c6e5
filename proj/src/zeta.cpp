#include "bundlezeta/zeta.hpp"

namespace bz {

RationalForm local_zeta(OrbitKind kind, const GroupRingElement& coeff, int degree) {
  Poly u = Poly::monomial(coeff, degree);
  Poly one = Poly::one(coeff.group());
  switch (kind) {
    case OrbitKind::Elliptic: return RationalForm(one, one - u);
    case OrbitKind::PositiveHyperbolic: return RationalForm(one - u);
    case OrbitKind::NegativeHyperbolic: return RationalForm(one + u);
  }
  throw Error("unreachable");
}

namespace {

// (1 - u)^M, (1 + u)^M or (1 - u)^{-M} for u = c t^p, truncated at N.
GradedSeries power_factor(OrbitKind kind, const GroupPtr& g, const Coords& c, int p, const Integer& M, int N) {
  GradedSeries f(g, N);
  Integer binom = 1;  // running binomial coefficient
  const unsigned long jmax = static_cast<unsigned long>(N / p);
  for (unsigned long j = 0; j <= jmax; ++j) {
    if (j > 0) {
      if (kind == OrbitKind::Elliptic) {
        binom *= M + static_cast<long>(j) - 1;  // C(M + j - 1, j)
      } else {
        binom *= M - static_cast<long>(j) + 1;  // C(M, j)
      }
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), j);
    }
    if (binom == 0) break;
    Integer coef = binom;
    if (kind == OrbitKind::PositiveHyperbolic && (j % 2)) coef = -coef;
    f[static_cast<int>(j) * p] = GroupRingElement::monomial(g, g->scale(c, static_cast<std::int64_t>(j)), Rational(coef));
  }
  return f;
}

}  // namespace

GradedSeries zeta_orbit_route(const OrbitCensus& census, int N, ZetaVariant v) {
  GroupPtr g = v == ZetaVariant::Plain ? trivial_group() : census.h1;
  std::map<std::tuple<int, OrbitKind, Coords>, Integer> merged;
  for (auto& [key, n] : census.count) {
    auto& [p, kind, cls] = key;
    if (p > N) continue;
    merged[{p, kind, v == ZetaVariant::Plain ? Coords{} : cls}] += n;
  }
  GradedSeries z = GradedSeries::one(g, N);
  for (auto& [key, n] : merged) {
    auto& [p, kind, cls] = key;
    z = z * power_factor(kind, g, cls, p, n, N);
  }
  assert_integral(z, "orbit-route zeta");
  return z;
}

GradedSeries zeta_orbit_route(const OrbitCatalog& catalog, int N, ZetaVariant v) {
  return zeta_orbit_route(OrbitCensus::of(catalog), N, v);
}

TotalAbelianData total_abelian_matrices(const MonodromySpec& spec) {
  TotalAbelianData d{mapping_torus_h1(spec.phi1), {}};
  const GroupPtr& H = d.h1.group;
  Coords mu = H->zero();
  mu[d.h1.mu_index] = 1;
  GroupRingElement tmu = GroupRingElement::monomial(H, mu);
  auto chain = spec.chain();
  if (spec.lifts.empty()) {
    if (!d.h1.coker->trivial())
      throw PreconditionError("total-Abelian data needs lifted matrices unless coker(1 - phi_1) is trivial");
    for (const IntMatrix* m : chain) d.matrices.push_back(RingMatrix::from_int(H, *m) * tmu);
    return d;
  }
  if (spec.lifts.size() != chain.size()) throw PreconditionError("one lifted matrix per chain group is required");
  if (!spec.lift_group || *spec.lift_group != *d.h1.coker)
    throw PreconditionError("lifted matrices must have coefficients in Z[coker(1 - phi_1)]");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (spec.lifts[i].dim() != chain[i]->rows()) throw PreconditionError("lifted matrix has the wrong size");
    RingMatrix m = RingMatrix(spec.lifts[i]);
    // re-tag with the canonical coker group, then push into H_1(T_phi)
    RingMatrix tagged(d.h1.coker, m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c)
        for (auto& [k, x] : m(r, c).terms()) tagged(r, c).add_term(k, x);
    d.matrices.push_back(tagged.pushforward(d.h1.coker_inclusion) * tmu);
  }
  return d;
}

RationalForm zeta_det_route(const MonodromySpec& spec, ZetaVariant v) {
  std::vector<RingMatrix> ms;
  GroupPtr g;
  if (v == ZetaVariant::Plain) {
    g = trivial_group();
    for (const IntMatrix* m : spec.chain()) ms.push_back(RingMatrix::from_int(g, *m));
  } else {
    TotalAbelianData d = total_abelian_matrices(spec);
    g = d.h1.group;
    ms = std::move(d.matrices);
  }
  Poly num = Poly::one(g), den = Poly::one(g);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Poly c = char_series(ms[i]);
    if (i % 2) num = num * c; else den = den * c;
  }
  return RationalForm(num, den);
}

GradedSeries zeta_exp_route(const MonodromySpec& spec, int N, ZetaVariant v) {
  std::vector<RingMatrix> ms;
  GroupPtr g;
  if (v == ZetaVariant::Plain) {
    g = trivial_group();
    for (const IntMatrix* m : spec.chain()) ms.push_back(RingMatrix::from_int(g, *m));
  } else {
    TotalAbelianData d = total_abelian_matrices(spec);
    g = d.h1.group;
    ms = std::move(d.matrices);
  }
  GradedSeries s(g, N);
  std::vector<RingMatrix> pw(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) pw[i] = RingMatrix::identity(g, ms[i].dim());
  for (int n = 1; n <= N; ++n) {
    GroupRingElement L(g);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      pw[i] = pw[i] * ms[i];
      if (i % 2) L -= pw[i].trace(); else L += pw[i].trace();
    }
    s[n] = L * frac(1, n);
  }
  GradedSeries z = s.exp();
  assert_integral(z, "exp-route zeta");
  return z;
}

Poly alexander_polynomial(int i, const MonodromySpec& spec) {
  TotalAbelianData d = total_abelian_matrices(spec);
  if (i < 0 || static_cast<std::size_t>(i) >= d.matrices.size())
    throw PreconditionError("no chain group of index " + std::to_string(i));
  return char_series(d.matrices[static_cast<std::size_t>(i)]);
}

// ---------------------------------------------------------------- twisted

RationalForm twisted_local_zeta(OrbitKind kind, const RingMatrix& rho, int period, int N) {
  if (period < 1) throw PreconditionError("period must be positive");
  Poly c = char_series(rho, N < 0 ? -1 : N / period);
  Poly one = Poly::one(rho.group());
  switch (kind) {
    case OrbitKind::Elliptic: return RationalForm(one, c.stretched(period));
    case OrbitKind::PositiveHyperbolic: return RationalForm(c.stretched(period));
    case OrbitKind::NegativeHyperbolic: return RationalForm(c.negated_variable().stretched(period));
  }
  throw Error("unreachable");
}

GradedSeries twisted_local_zeta_trace(OrbitKind kind, const RingMatrix& rho, int period, int N) {
  const GroupPtr& g = rho.group();
  GradedSeries s(g, N);
  RingMatrix pw = RingMatrix::identity(g, rho.dim());
  for (int m = 1; period * m <= N; ++m) {
    pw = pw * rho;
    s[period * m] = pw.trace() * frac(lefschetz_sign(kind, m), m);
  }
  return s.exp();
}

GradedSeries twisted_zeta(const OrbitCatalog& catalog, const RepresentationAssignment& rep, int N, bool verify) {
  catalog.check();
  GradedSeries z = GradedSeries::one(rep.group, N);
  for (auto& o : catalog.orbits) {
    if (o.period > N) continue;
    auto it = rep.rho.find(o.label);
    if (it == rep.rho.end()) throw PreconditionError("representation has no matrix for orbit " + o.label);
    require_same_group(it->second.group(), rep.group, "representation matrix");
    GradedSeries f = twisted_local_zeta(o.kind, it->second, o.period, N).expand(N);
    if (verify && f != twisted_local_zeta_trace(o.kind, it->second, o.period, N))
      throw Error("twisted local zeta closed form disagrees with the trace route at orbit " + o.label);
    z = z * f;
  }
  assert_integral(z, "twisted zeta");
  return z;
}

}  // namespace bz
