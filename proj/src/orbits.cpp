#include "bundlezeta/orbits.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace bz {

int lefschetz_sign(OrbitKind k, long m) {
  switch (k) {
    case OrbitKind::Elliptic: return 1;
    case OrbitKind::PositiveHyperbolic: return -1;
    case OrbitKind::NegativeHyperbolic: return (m % 2) ? 1 : -1;
  }
  return 0;
}

std::string to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::Elliptic: return "elliptic";
    case OrbitKind::PositiveHyperbolic: return "pos_hyp";
    case OrbitKind::NegativeHyperbolic: return "neg_hyp";
  }
  return "?";
}

OrbitKind parse_orbit_kind(const std::string& s) {
  if (s == "elliptic") return OrbitKind::Elliptic;
  if (s == "pos_hyp") return OrbitKind::PositiveHyperbolic;
  if (s == "neg_hyp") return OrbitKind::NegativeHyperbolic;
  throw SchemaError("", "unknown orbit kind '" + s + "' (expected elliptic, pos_hyp or neg_hyp)");
}

// ---------------------------------------------------------------- catalogs

GroupHom OrbitCatalog::mu_weight() const {
  IntMatrix w(1, h1->ncoords());
  w(0, mu_index) = 1;
  return GroupHom(h1, make_group(1), std::move(w));
}

void OrbitCatalog::check() const {
  if (mu_index >= h1->rank()) throw PreconditionError("catalog: mu coordinate must be a free coordinate");
  std::set<std::string> seen;
  for (auto& o : orbits) {
    if (o.period < 1) throw PreconditionError("orbit " + o.label + ": period must be positive");
    h1->check(o.h1_class);
    if (o.h1_class[mu_index] != o.period)
      throw PreconditionError("orbit " + o.label + ": mu-coordinate of its class (" + std::to_string(o.h1_class[mu_index]) +
                              ") differs from its period (" + std::to_string(o.period) + ")");
    if (!seen.insert(o.label).second) throw PreconditionError("duplicate orbit label " + o.label);
  }
}

const OrbitRecord& OrbitCatalog::find(const std::string& label) const {
  for (auto& o : orbits)
    if (o.label == label) return o;
  throw PreconditionError("no orbit labelled " + label);
}

OrbitCensus OrbitCensus::of(const OrbitCatalog& c) {
  c.check();
  OrbitCensus s{c.h1, c.mu_index, {}};
  for (auto& o : c.orbits) s.count[{o.period, o.kind, o.h1_class}] += 1;
  return s;
}

Integer OrbitCensus::total() const {
  Integer t = 0;
  for (auto& [k, n] : count) t += n;
  return t;
}

int OrbitCensus::max_period() const {
  int p = 0;
  for (auto& [k, n] : count) p = std::max(p, std::get<0>(k));
  return p;
}

// ---------------------------------------------------------------- monodromy

MonodromySpec MonodromySpec::closed(const IntMatrix& phi1) {
  if (!phi1.square() || phi1.rows() % 2) throw PreconditionError("closed surface monodromy must be 2g x 2g");
  MonodromySpec s;
  s.phi0 = IntMatrix{{1}};
  s.phi1 = phi1;
  s.phi2 = IntMatrix{{1}};
  s.genus = static_cast<int>(phi1.rows() / 2);
  return s;
}

MonodromySpec MonodromySpec::bordered(const IntMatrix& phi1, int genus, int boundary) {
  if (boundary < 1) throw PreconditionError("bordered surface needs at least one boundary component");
  if (!phi1.square() || phi1.rows() != static_cast<std::size_t>(2 * genus + boundary - 1))
    throw PreconditionError("monodromy size does not match rank H_1 = 2g + b - 1");
  MonodromySpec s;
  s.phi0 = IntMatrix{{1}};
  s.phi1 = phi1;
  s.genus = genus;
  s.boundary = boundary;
  return s;
}

std::vector<const IntMatrix*> MonodromySpec::chain() const {
  std::vector<const IntMatrix*> c{&phi0, &phi1};
  if (phi2) c.push_back(&*phi2);
  return c;
}

Integer lefschetz_number(const MonodromySpec& spec, unsigned n) {
  Integer L = 0;
  int sign = 1;
  for (const IntMatrix* m : spec.chain()) {
    L += sign * m->power(n).trace();
    sign = -sign;
  }
  return L;
}

// ---------------------------------------------------------------- torus orbits

namespace {

using i128 = __int128;

std::int64_t mod(i128 a, std::int64_t m) {
  i128 r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

struct Small2 {
  std::int64_t a[2][2];
};

Small2 small(const IntMatrix& m) {
  Small2 s;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s.a[i][j] = to_int64(m(i, j));
  return s;
}

void require_hyperbolic(const IntMatrix& A) {
  if (A.rows() != 2 || A.cols() != 2) throw PreconditionError("torus map must be 2x2");
  if (A.det() != 1) throw PreconditionError("torus map must lie in SL(2,Z)");
  if (abs(A.trace()) <= 2) throw PreconditionError("torus map is not hyperbolic (|trace| <= 2)");
}

// Fixed points of A^n: (A^n - 1) x in Z^2. With U (A^n - 1) V = diag(d1, d2)
// they are x = V (j1/d1, j2/d2), i.e. numerators V (j1 d2/d1, j2) over d2.
struct Level {
  int n;
  std::int64_t d1, d2, ratio;
  Small2 V, Vinv, B;  // B = A^n - 1
  std::int64_t trace;

  explicit Level(const IntMatrix& A, int n_) : n(n_) {
    IntMatrix An = A.power(static_cast<unsigned>(n));
    IntMatrix Bm = An - IntMatrix::identity(2);
    SmithForm s = smith_normal_form(Bm);
    d1 = to_int64(s.D(0, 0));
    d2 = to_int64(s.D(1, 1));
    if (d1 <= 0 || d2 <= 0) throw PreconditionError("degenerate torus map power");
    ratio = d2 / d1;
    V = small(s.V);
    Integer dv = s.V.det();
    IntMatrix adj{{0, 0}, {0, 0}};
    adj(0, 0) = s.V(1, 1), adj(0, 1) = -s.V(0, 1), adj(1, 0) = -s.V(1, 0), adj(1, 1) = s.V(0, 0);
    if (dv == -1) adj = IntMatrix{{-1, 0}, {0, -1}} * adj;
    Vinv = small(adj);
    B = small(Bm);
    trace = to_int64(An.trace());
  }

  std::uint64_t size() const { return static_cast<std::uint64_t>(d1) * static_cast<std::uint64_t>(d2); }

  void point(std::uint64_t idx, std::int64_t p[2]) const {
    std::int64_t j1 = static_cast<std::int64_t>(idx / static_cast<std::uint64_t>(d2));
    std::int64_t j2 = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(d2));
    i128 w1 = static_cast<i128>(j1) * ratio, w2 = j2;
    p[0] = mod(V.a[0][0] * w1 + V.a[0][1] * w2, d2);
    p[1] = mod(V.a[1][0] * w1 + V.a[1][1] * w2, d2);
  }

  std::uint64_t index(const std::int64_t p[2]) const {
    std::int64_t w1 = mod(static_cast<i128>(Vinv.a[0][0]) * p[0] + static_cast<i128>(Vinv.a[0][1]) * p[1], d2);
    std::int64_t w2 = mod(static_cast<i128>(Vinv.a[1][0]) * p[0] + static_cast<i128>(Vinv.a[1][1]) * p[1], d2);
    return static_cast<std::uint64_t>(w1 / ratio) * static_cast<std::uint64_t>(d2) + static_cast<std::uint64_t>(w2);
  }

  // (A^n - 1) x as an integer vector
  void kappa(const std::int64_t p[2], std::int64_t out[2]) const {
    for (int i = 0; i < 2; ++i) {
      i128 v = static_cast<i128>(B.a[i][0]) * p[0] + static_cast<i128>(B.a[i][1]) * p[1];
      if (v % d2 != 0) throw Error("internal: fixed point numerators are inconsistent");
      out[i] = static_cast<std::int64_t>(v / d2);
    }
  }
};

}  // namespace

void for_each_torus_orbit(const IntMatrix& A, int N, const std::function<void(const TorusOrbit&)>& emit) {
  require_hyperbolic(A);
  MappingTorusH1 h1 = mapping_torus_h1(A);
  Small2 a = small(A);
  const IntMatrix& F = h1.fiber_class.matrix();
  const std::size_t nc = h1.group->ncoords();
  std::vector<std::int64_t> f(nc * 2);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < 2; ++j) f[i * 2 + j] = to_int64(F(i, j));

  for (int n = 1; n <= N; ++n) {
    Level L(A, n);
    const std::uint64_t total = L.size();
    std::vector<bool> seen(total, false);
    const OrbitKind kind = L.trace > 2 ? OrbitKind::PositiveHyperbolic : OrbitKind::NegativeHyperbolic;
    std::int64_t p[2], q[2], k[2];
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (seen[idx]) continue;
      L.point(idx, p);
      q[0] = p[0], q[1] = p[1];
      int size = 0;
      do {
        seen[L.index(q)] = true;
        std::int64_t x = mod(static_cast<i128>(a.a[0][0]) * q[0] + static_cast<i128>(a.a[0][1]) * q[1], L.d2);
        std::int64_t y = mod(static_cast<i128>(a.a[1][0]) * q[0] + static_cast<i128>(a.a[1][1]) * q[1], L.d2);
        q[0] = x, q[1] = y;
        ++size;
      } while (q[0] != p[0] || q[1] != p[1]);
      if (size != n) continue;
      L.kappa(p, k);
      TorusOrbit o;
      o.period = n;
      o.kind = kind;
      o.h1_class.resize(nc);
      for (std::size_t i = 0; i < nc; ++i) {
        i128 v = static_cast<i128>(f[i * 2]) * k[0] + static_cast<i128>(f[i * 2 + 1]) * k[1];
        std::int64_t m = h1.group->modulus(i);
        o.h1_class[i] = m ? mod(v, m) : static_cast<std::int64_t>(v);
      }
      o.h1_class[h1.mu_index] = n;
      o.point[0] = p[0], o.point[1] = p[1];
      o.den = L.d2;
      emit(o);
    }
  }
}

OrbitCatalog enumerate_torus_orbits(const IntMatrix& A, int N) {
  require_hyperbolic(A);
  MappingTorusH1 h1 = mapping_torus_h1(A);
  OrbitCatalog c{h1.group, h1.mu_index, {}};
  std::vector<int> per_level(static_cast<std::size_t>(N) + 1, 0);
  for_each_torus_orbit(A, N, [&](const TorusOrbit& o) {
    int i = ++per_level[static_cast<std::size_t>(o.period)];
    c.orbits.push_back({"p" + std::to_string(o.period) + "." + std::to_string(i), o.period, o.kind, o.h1_class});
  });
  return c;
}

OrbitCensus torus_orbit_census(const IntMatrix& A, int N) {
  require_hyperbolic(A);
  MappingTorusH1 h1 = mapping_torus_h1(A);
  OrbitCensus s{h1.group, h1.mu_index, {}};
  // count per key with machine integers, convert at the end
  std::map<std::tuple<int, OrbitKind, Coords>, std::uint64_t> raw;
  for_each_torus_orbit(A, N, [&](const TorusOrbit& o) { ++raw[{o.period, o.kind, o.h1_class}]; });
  for (auto& [k, v] : raw) s.count[k] = Integer(static_cast<unsigned long>(v));
  return s;
}

std::vector<FixedPoint> torus_fixed_points(const IntMatrix& A, int n) {
  require_hyperbolic(A);
  MappingTorusH1 h1 = mapping_torus_h1(A);
  Level L(A, n);
  std::vector<FixedPoint> out;
  out.reserve(L.size());
  for (std::uint64_t idx = 0; idx < L.size(); ++idx) {
    FixedPoint fp;
    L.point(idx, fp.point);
    fp.den = L.d2;
    std::int64_t k[2];
    L.kappa(fp.point, k);
    Coords kc{k[0], k[1]};
    Coords full = h1.fiber_class.apply(kc);
    fp.kappa.clear();
    for (std::size_t i = 0; i < full.size(); ++i)
      if (i != h1.mu_index) fp.kappa.push_back(full[i]);
    out.push_back(std::move(fp));
  }
  return out;
}

// ---------------------------------------------------------------- ledger

CatalogReport validate_orbit_catalog(const OrbitCensus& census, const MonodromySpec& spec, int N) {
  CatalogReport rep;
  for (int n = 1; n <= N; ++n) {
    LedgerLine line;
    line.n = n;
    line.orbit_side = 0;
    for (auto& [key, count] : census.count) {
      int p = std::get<0>(key);
      if (n % p) continue;
      line.orbit_side += count * p * lefschetz_sign(std::get<1>(key), n / p);
    }
    line.lefschetz = lefschetz_number(spec, static_cast<unsigned>(n));
    line.ok = line.orbit_side == line.lefschetz;
    if (!line.ok && rep.ok) rep.ok = false, rep.first_bad = n;
    rep.lines.push_back(line);
  }
  return rep;
}

CatalogReport validate_orbit_catalog(const OrbitCatalog& catalog, const MonodromySpec& spec, int N) {
  return validate_orbit_catalog(OrbitCensus::of(catalog), spec, N);
}

}  // namespace bz
