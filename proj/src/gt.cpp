#include "bundlezeta/gt.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bz {

// ---------------------------------------------------------------- classes

Integer ClassLattice::dot(const Coords& a, const Coords& b) const {
  Integer s = 0;
  const std::size_t r = group->rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s += Q(i, j) * a[i] * b[j];
  return s;
}

Integer ClassLattice::c1_of(const Coords& a) const {
  Integer s = 0;
  for (std::size_t i = 0; i < group->rank(); ++i) s += c1[i] * a[i];
  return s;
}

void ClassLattice::check() const {
  if (!group) throw PreconditionError("class lattice has no group");
  const std::size_t r = group->rank();
  if (Q.rows() != r || Q.cols() != r) throw PreconditionError("intersection form must be rank x rank");
  if (Q != Q.transpose()) throw PreconditionError("intersection form must be symmetric");
  if (c1.size() != r) throw PreconditionError("c1 needs one entry per free generator");
  require_same_group(weight.source(), group, "class weight");
  if (weight.target()->ncoords() != 1 || weight.target()->rank() != 1) throw PreconditionError("class weight must land in Z");
}

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::S2: return "S2";
    case ClassKind::T2: return "T2";
    case ClassKind::Other: return "other";
  }
  return "?";
}

ClassInvariants class_invariants(const ClassLattice& lat, const Coords& A) {
  lat.group->check(A);
  Integer aa = lat.dot(A, A), c = lat.c1_of(A);
  Integer diff = aa - c;
  if (mpz_odd_p(diff.get_mpz_t())) throw PreconditionError("A.A - <c1,A> is odd; c1 is not characteristic on this class");
  ClassInvariants inv;
  inv.d = aa + c;
  inv.g = 1 + diff / 2;
  if (aa == 0 && inv.g == 0) inv.kind = ClassKind::S2;
  else if (aa == 0 && inv.g == 1) inv.kind = ClassKind::T2;
  return inv;
}

ClassKind classify(const ClassLattice& lat, const Coords& A) { return class_invariants(lat, A).kind; }

namespace {

std::int64_t free_gcd(const FGAbelianGroup& g, const Coords& A) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) d = std::gcd(d, A[i]);
  return d;
}

// B with m B = A, smallest nonnegative torsion entries; nullopt when unsolvable.
std::optional<Coords> divide(const FGAbelianGroup& g, const Coords& A, std::int64_t m) {
  Coords B(A.size(), 0);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (A[i] % m) return std::nullopt;
    B[i] = A[i] / m;
  }
  for (std::size_t i = g.rank(); i < A.size(); ++i) {
    const std::int64_t n = g.modulus(i);
    bool found = false;
    for (std::int64_t x = 0; x < n && !found; ++x)
      if (((m % n) * x - A[i]) % n == 0) B[i] = x, found = true;
    if (!found) return std::nullopt;
  }
  return B;
}

}  // namespace

bool multiply_toroidal(const ClassLattice& lat, const Coords& A) {
  const std::int64_t d = free_gcd(*lat.group, A);
  for (std::int64_t m = 2; m <= d; ++m) {
    if (d % m) continue;
    auto B = divide(*lat.group, A, m);
    if (B && class_invariants(lat, *B).g == 1) return true;
  }
  return false;
}

Root toroidal_root(const ClassLattice& lat, const Coords& A) {
  const std::int64_t d = free_gcd(*lat.group, A);
  if (d == 0) throw PreconditionError("a torus class needs a nonzero free part");
  for (std::int64_t m = d; m >= 1; --m) {
    if (d % m) continue;
    if (auto B = divide(*lat.group, A, m)) return {*B, m};
  }
  throw Error("unreachable");
}

std::string to_string(const TorusType& t) {
  std::string s = t.sign > 0 ? "(+,{" : "(-,{";
  bool first = true;
  for (int i : t.I) s += (first ? "" : ",") + std::to_string(i), first = false;
  return s + "})";
}

namespace {

std::int64_t weight_of(const ClassLattice& lat, const Coords& c) { return lat.weight.apply(c)[0]; }

bool in_t2(const ClassLattice& lat, const Coords& c) { return classify(lat, c) == ClassKind::T2; }

}  // namespace

void check_curves(const ClassLattice& lat, const std::vector<CurveRecord>& curves) {
  lat.check();
  for (auto& c : curves) {
    const std::string at = " (curve " + c.label + ")";
    lat.group->check(c.cls);
    if (c.sign != 1 && c.sign != -1) throw PreconditionError("curve sign must be +1 or -1" + at);
    if (c.count < 1) throw PreconditionError("curve multiplicity must be positive" + at);
    if (weight_of(lat, c.cls) <= 0) throw PreconditionError("curve class must have positive weight" + at);
    const bool t2 = in_t2(lat, c.cls);
    if (t2 != c.torus_type.has_value())
      throw PreconditionError(std::string(t2 ? "torus class needs a torus type" : "only classes in T_2 carry a torus type") + at);
    if (c.torus_type) {
      if (c.torus_type->sign != c.sign) throw PreconditionError("sign of the torus type differs from the curve sign" + at);
      for (int i : c.torus_type->I)
        if (i < 1 || i > 3) throw PreconditionError("double covers are numbered 1..3" + at);
    }
  }
}

// ---------------------------------------------------------------- D(A)

namespace {

struct Candidate {
  Coords cls;
  Integer d;
  bool isotropic = true;
  std::int64_t w = 0;
};

std::vector<Candidate> prepare(const ClassLattice& lat, const std::vector<Coords>& classes) {
  std::vector<Coords> sorted;
  for (auto& c : classes) sorted.push_back(lat.group->reduce(c));
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Candidate> out;
  for (auto& c : sorted) {
    ClassInvariants inv = class_invariants(lat, c);
    if (inv.d < 0 || multiply_toroidal(lat, c)) continue;
    std::int64_t w = weight_of(lat, c);
    if (w <= 0) throw PreconditionError("candidate classes need positive weight");
    out.push_back({c, inv.d, lat.dot(c, c) == 0, w});
  }
  return out;
}

// Every decomposition of total weight <= W.
void enumerate(const ClassLattice& lat, const std::vector<Candidate>& cands, std::int64_t W,
               const std::function<void(const std::vector<std::pair<std::size_t, int>>&)>& emit) {
  std::vector<std::pair<std::size_t, int>> chosen;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t budget) {
    if (i == cands.size()) {
      if (!chosen.empty()) emit(chosen);
      return;
    }
    rec(i + 1, budget);
    const Candidate& c = cands[i];
    if (c.w > budget) return;
    for (auto& [j, n] : chosen)
      if (lat.dot(cands[j].cls, c.cls) != 0) return;
    const int nmax = c.isotropic ? static_cast<int>(budget / c.w) : 1;
    for (int n = 1; n <= nmax; ++n) {
      chosen.push_back({i, n});
      rec(i + 1, budget - n * c.w);
      chosen.pop_back();
    }
  };
  rec(0, W);
}

Coords sum_of(const ClassLattice& lat, const std::vector<Candidate>& cands, const std::vector<std::pair<std::size_t, int>>& ch) {
  Coords A = lat.group->zero();
  for (auto& [i, n] : ch) A = lat.group->add(A, lat.group->scale(cands[i].cls, n));
  return A;
}

Integer factorial(const Integer& n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n.get_ui());
  return r;
}

}  // namespace

std::vector<Decomposition> decompositions(const ClassLattice& lat, const std::vector<Coords>& candidates, const Coords& A) {
  lat.check();
  Coords target = lat.group->reduce(A);
  auto cands = prepare(lat, candidates);
  std::vector<Decomposition> out;
  enumerate(lat, cands, weight_of(lat, target), [&](const std::vector<std::pair<std::size_t, int>>& ch) {
    if (sum_of(lat, cands, ch) != target) return;
    Decomposition d;
    for (auto& [i, n] : ch) d.push_back({cands[i].cls, n});
    out.push_back(std::move(d));
  });
  return out;
}

// ---------------------------------------------------------------- Taubes series

RationalForm taubes_p(int sign, int s) {
  if (sign != 1 && sign != -1) throw PreconditionError("torus sign must be +1 or -1");
  if (s < 0 || s > 3) throw PreconditionError("number of negative double covers must be 0..3");
  GroupPtr g = trivial_group();
  GroupRingElement one = GroupRingElement::one(g);
  auto p0 = [&](int k) { return RationalForm(Poly::one(g), Poly::one_minus(one, k)); };
  RationalForm p;
  switch (s) {
    case 0: p = p0(1); break;
    case 1: p = p0(1) / p0(2); break;
    case 2: p = p0(1) * p0(4) / p0(2).pow(2); break;
    default: p = p0(1) * p0(4) / p0(2).pow(3); break;
  }
  return sign > 0 ? p : p.inverse();
}

Integer r_coeff(const RationalForm& P, int l) {
  if (l < 0) throw PreconditionError("r(C, l) needs l >= 0");
  GradedSeries s = P.expand(l);
  Rational c = s[l].coefficient(P.group()->zero());
  if (c.get_den() != 1) throw IntegralityError("Taubes coefficient is not an integer");
  return c.get_num();
}

Integer ruan(const std::vector<CurveRecord>& curves, const Coords& B) {
  Integer r = 0;
  for (auto& c : curves)
    if (c.cls == B) r += c.sign * c.count;
  return r;
}

RationalForm p_pi(const CurveRecord& c) {
  const std::string at = " (curve " + c.label + ")";
  if (!c.torus_type) throw PreconditionError("P_pi needs a torus type" + at);
  if (!c.series) throw PreconditionError("P_pi needs the attached GT_X series" + at);
  const CurveSeries& s = *c.series;
  auto cover = [&](int i) -> const RationalForm& {
    auto it = s.covers.find(i);
    if (it == s.covers.end()) throw PreconditionError("missing series of cover " + std::to_string(i) + at);
    require_same_group(it->second.group(), s.curve.group(), "cover series");
    return it->second;
  };
  const std::set<int>& I = c.torus_type->I;
  RationalForm p = s.curve;
  if (I.size() == 1) {
    p = p / cover(*I.begin());
  } else if (I.size() >= 2) {
    p = p * cover(4);
    for (int i : I) p = p / cover(i);
  }
  return c.sign > 0 ? p : p.inverse();
}

// ---------------------------------------------------------------- covers

namespace {

const IntMatrix& f_matrix(int i) {
  static const IntMatrix f[5] = {IntMatrix(), IntMatrix{{2, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, 2}},
                                 IntMatrix{{1, -1}, {1, 1}}, IntMatrix{{2, 0}, {0, 2}}};
  if (i < 1 || i > 4) throw PreconditionError("covers are numbered 1..4");
  return f[i];
}

// iota_1 = (1 0), iota_2 = (0 1), iota_3 = (1 1) in H^1(C, Z/2)
int iota_index(long a, long b) {
  a = ((a % 2) + 2) % 2, b = ((b % 2) + 2) % 2;
  if (a == 1 && b == 0) return 1;
  if (a == 0 && b == 1) return 2;
  if (a == 1 && b == 1) return 3;
  return 0;
}

}  // namespace

CoverClass cover_class(int i) { return {i, f_matrix(i)}; }

int iota_pullback(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw PreconditionError("double covers are numbered 1..3");
  if (i == j) throw PreconditionError("iota_compose needs two different double covers");
  static const long row[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  const IntMatrix& f = f_matrix(i);
  long a = 0, b = 0;
  for (int r = 0; r < 2; ++r) {
    a += row[j][r] * f(static_cast<std::size_t>(r), 0).get_si();
    b += row[j][r] * f(static_cast<std::size_t>(r), 1).get_si();
  }
  int k = iota_index(a, b);
  if (k == 0) throw Error("internal: pulled-back class vanishes");
  return k;
}

CoverClass iota_compose(int i, int j) {
  int k = iota_pullback(i, j);
  IntMatrix lattice = column_hermite_form(f_matrix(i) * f_matrix(k));
  if (lattice != f_matrix(4)) throw Error("composite of two double covers is not the 4-fold cover");
  return {4, lattice};
}

// ---------------------------------------------------------------- assembly

namespace {

struct Ring {
  GroupPtr R;
  GroupHom to_x, from_x;
  GroupHom weight;  // on R
};

Ring plain_ring(const ClassLattice& lat) {
  return {lat.group, GroupHom::identity(lat.group), GroupHom::identity(lat.group), lat.weight};
}

Ring twisted_ring(const ClassLattice& lat, const TwistRing& t) {
  require_same_group(t.to_x.source(), t.group, "twist ring projection");
  require_same_group(t.to_x.target(), lat.group, "twist ring projection");
  require_same_group(t.from_x.source(), lat.group, "twist ring embedding");
  require_same_group(t.from_x.target(), t.group, "twist ring embedding");
  return {t.group, t.to_x, t.from_x, lat.weight.after(t.to_x)};
}

// z -> coefficient * t_{j cls} at weight j w
Poly at_class(const Poly& p, const GroupPtr& R, const Coords& cls, std::int64_t w) {
  std::vector<GroupRingElement> c(static_cast<std::size_t>(std::max(0, p.degree()) * w + 1), GroupRingElement(R));
  for (int j = 0; j <= p.degree(); ++j) {
    Rational a = p.coeff(j).coefficient({});
    if (a != 0) c[static_cast<std::size_t>(j * w)] = GroupRingElement::monomial(R, R->scale(cls, j), a);
  }
  return Poly(R, std::move(c), true);
}

struct Assembly {
  const ClassLattice& lat;
  Ring ring;
  std::int64_t W;
  std::map<Coords, GroupRingElement> ru;  // without t_B
  std::map<Coords, GradedSeries> tor;      // root -> prod P(C)
  std::vector<Candidate> cands;

  Assembly(const ClassLattice& l, Ring r, const std::vector<CurveRecord>& curves, std::int64_t w, bool twisted)
      : lat(l), ring(std::move(r)), W(w) {
    check_curves(lat, curves);
    std::vector<Coords> classes;
    for (auto& c : curves) {
      const std::string at = " (curve " + c.label + ")";
      if (c.torus_type) {
        if (twisted && c.gt_w) throw PreconditionError("tori carry GT_X series, not a GT_W value" + at);
        if (!twisted && c.series) throw PreconditionError("plain mode takes no attached series" + at);
        Coords root = toroidal_root(lat, c.cls).root;
        RationalForm P = twisted ? p_pi(c) : at_class_form(c);
        if (twisted) require_same_group(P.group(), ring.R, "attached series");
        if (!P.weight_graded()) throw PreconditionError("attached series must be weight graded" + at);
        GradedSeries f = P.expand(static_cast<int>(W));
        if (c.count != 1) f = f.pow(c.count.get_si());
        auto it = tor.find(root);
        if (it == tor.end()) tor.emplace(root, f); else it->second = it->second * f;
        classes.push_back(root);
      } else {
        if (twisted && !c.gt_w) throw PreconditionError("twisted mode needs GT_W of the pull-back" + at);
        if (!twisted && c.gt_w) throw PreconditionError("plain mode takes no GT_W value" + at);
        GroupRingElement v = twisted ? *c.gt_w : GroupRingElement::one(ring.R);
        require_same_group(v.group(), ring.R, "GT_W value");
        for (auto& [g, x] : v.terms())
          if (!lat.group->is_zero(ring.to_x.apply(g))) throw PreconditionError("GT_W value must lie in Z[H_2(W)]" + at);
        auto it = ru.try_emplace(c.cls, GroupRingElement(ring.R)).first;
        it->second += v * Rational(c.sign * c.count);
        classes.push_back(c.cls);
      }
    }
    cands = prepare(lat, classes);
    for (auto& [root, f] : tor) check_span(root, f);
  }

  RationalForm at_class_form(const CurveRecord& c) const {
    RationalForm t = taubes_p(c.sign, c.torus_type->s());
    std::int64_t w = weight_of(lat, c.cls);
    return RationalForm(at_class(t.num(), ring.R, c.cls, w), at_class(t.den(), ring.R, c.cls, w));
  }

  void check_span(const Coords& B, const GradedSeries& f) const {
    const std::int64_t w = weight_of(lat, B);
    for (int k = 1; k <= f.truncation(); ++k)
      for (auto& [g, x] : f[k].terms()) {
        if (ring.weight.apply(g)[0] != k) throw PreconditionError("attached series is not graded by the class weight");
        if (k % w || ring.to_x.apply(g) != lat.group->scale(B, k / w))
          throw PreconditionError("attached series leaves the multiples of its torus class");
      }
  }

  GroupRingElement qu(const Coords& B, int n) const {
    auto it = tor.find(B);
    const std::int64_t k = n * weight_of(lat, B);
    if (it == tor.end() || k > it->second.truncation()) return GroupRingElement(ring.R);
    return it->second[static_cast<int>(k)];
  }

  GroupRingElement ru_t(const Coords& B) const {
    auto it = ru.find(B);
    if (it == ru.end()) return GroupRingElement(ring.R);
    return it->second.shifted(ring.from_x.apply(B));
  }

  GradedSeries run(const std::optional<Coords>& only = std::nullopt) const {
    GradedSeries out = GradedSeries::one(ring.R, static_cast<int>(W), true);
    enumerate(lat, cands, W, [&](const std::vector<std::pair<std::size_t, int>>& ch) {
      Coords A = sum_of(lat, cands, ch);
      if (only && A != *only) return;
      Integer dA = 0;
      for (auto& [i, n] : ch) dA += cands[i].d * n;
      GroupRingElement term = GroupRingElement::constant(ring.R, Rational(factorial(dA)));
      for (auto& [i, n] : ch) {
        const Candidate& c = cands[i];
        if (in_t2(lat, c.cls)) {
          term = term * qu(c.cls, n);
        } else {
          GroupRingElement r = ru_t(c.cls), p = GroupRingElement::one(ring.R);
          for (int e = 0; e < n; ++e) p = p * r;
          Rational den(factorial(c.d) * factorial(n));
          term = p * (1 / den) * term;
        }
        if (term.is_zero()) return;
      }
      out[static_cast<int>(weight_of(lat, A))] += term;
    });
    return out;
  }
};

}  // namespace

Integer qu(const ClassLattice& lat, const std::vector<CurveRecord>& curves, const Coords& A, int m) {
  Coords B = lat.group->reduce(A);
  if (!in_t2(lat, B) || toroidal_root(lat, B).multiple != 1) throw PreconditionError("Qu needs a primitive class in T_2");
  if (m < 1) throw PreconditionError("Qu needs m >= 1");
  Assembly a(lat, plain_ring(lat), curves, m * weight_of(lat, B), false);
  Rational c = a.qu(B, m).coefficient(lat.group->scale(B, m));
  return c.get_num();
}

GroupRingElement ruan_pi(const TwistRing& ring, const std::vector<CurveRecord>& curves, const Coords& B) {
  GroupRingElement r(ring.group);
  for (auto& c : curves) {
    if (c.cls != B) continue;
    if (!c.gt_w) throw PreconditionError("twisted Ruan invariant needs GT_W of curve " + c.label);
    require_same_group(c.gt_w->group(), ring.group, "GT_W value");
    r += *c.gt_w * Rational(c.sign * c.count);
  }
  return r;
}

GroupRingElement qu_pi(const ClassLattice& lat, const TwistRing& ring, const std::vector<CurveRecord>& curves,
                       const Coords& A, int m) {
  Coords B = lat.group->reduce(A);
  if (!in_t2(lat, B) || toroidal_root(lat, B).multiple != 1) throw PreconditionError("Qu needs a primitive class in T_2");
  if (m < 1) throw PreconditionError("Qu needs m >= 1");
  Assembly a(lat, twisted_ring(lat, ring), curves, m * weight_of(lat, B), true);
  return a.qu(B, m);
}

GradedSeries gt(const ClassLattice& lat, const std::vector<CurveRecord>& curves, int W) {
  if (W < 0) throw PreconditionError("weight bound must be nonnegative");
  return Assembly(lat, plain_ring(lat), curves, W, false).run();
}

Rational gt_class(const ClassLattice& lat, const std::vector<CurveRecord>& curves, const Coords& A) {
  Coords B = lat.group->reduce(A);
  const std::int64_t w = weight_of(lat, B);
  if (w <= 0) throw PreconditionError("GT(X, A) needs a class of positive weight");
  GradedSeries s = Assembly(lat, plain_ring(lat), curves, w, false).run(B);
  return s[static_cast<int>(w)].coefficient(B);
}

GradedSeries gt_pi(const ClassLattice& lat, const TwistRing& ring, const std::vector<CurveRecord>& curves, int W) {
  if (W < 0) throw PreconditionError("weight bound must be nonnegative");
  return Assembly(lat, twisted_ring(lat, ring), curves, W, true).run();
}

// ---------------------------------------------------------------- product mode

TorusType product_mode_type(OrbitKind k) {
  switch (k) {
    case OrbitKind::Elliptic: return {1, {}};
    case OrbitKind::PositiveHyperbolic: return {-1, {}};
    case OrbitKind::NegativeHyperbolic: return {1, {2}};
  }
  throw Error("unreachable");
}

namespace {

ClassLattice product_lattice(const GroupPtr& h1, const GroupHom& mu) {
  const std::size_t r = h1->rank();
  return {h1, IntMatrix(r, r), std::vector<Integer>(r, 0), mu};
}

std::string class_label(const Coords& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

}  // namespace

ProductMode product_mode(const OrbitCensus& census) {
  OrbitCatalog shape{census.h1, census.mu_index, {}};
  ProductMode pm{product_lattice(census.h1, shape.mu_weight()), {}, std::nullopt};
  for (auto& [key, n] : census.count) {
    auto& [p, kind, cls] = key;
    CurveRecord c;
    c.label = "S1 x orbit p=" + std::to_string(p) + " " + to_string(kind) + " " + class_label(cls);
    c.cls = census.h1->reduce(cls);
    c.torus_type = product_mode_type(kind);
    c.sign = c.torus_type->sign;
    c.count = n;
    pm.curves.push_back(std::move(c));
  }
  return pm;
}

RationalForm product_mode_gt_x(const OrbitRecord& o, const std::vector<RingMatrix>& rho, int k, const GroupHom& mu, int W) {
  if (rho.empty()) throw PreconditionError("no matrices for orbit " + o.label);
  if (k < 1) throw PreconditionError("cover degree must be positive");
  const GroupPtr& g = rho[0].group();
  const int step = k * o.period;
  Poly num = Poly::one(g), den = Poly::one(g);
  for (std::size_t i = 0; i < rho.size(); ++i) {
    Poly c = char_series(rho[i].power(static_cast<unsigned>(k)), W / step).stretched(step);
    if (i % 2) num = num * c; else den = den * c;
  }
  return specialize(RationalForm(num, den), GroupHom::identity(g), TValue::SetToOne, mu);
}

ProductMode product_mode(const OrbitCatalog& catalog, const BundleSpec& b, int N) {
  validate_bundle(b, catalog, N);
  BundleRing ring = bundle_ring(b);
  const GroupPtr& S = ring.sum.group;
  GroupHom mu = catalog.mu_weight().after(ring.sum.proj2);
  ProductMode pm{product_lattice(catalog.h1, catalog.mu_weight()), {}, TwistRing{S, ring.sum.proj2, ring.sum.inj2}};
  for (auto& o : catalog.orbits) {
    if (o.period > N) continue;
    auto rho = rho_pi_matrices(b, ring, o.label);
    CurveRecord c;
    c.label = "S1 x " + o.label;
    c.cls = catalog.h1->reduce(o.h1_class);
    c.torus_type = product_mode_type(o.kind);
    c.sign = c.torus_type->sign;
    CurveSeries s{product_mode_gt_x(o, rho, 1, mu, N), {}};
    // the negative double cover runs twice along delta
    if (o.kind == OrbitKind::NegativeHyperbolic) s.covers.emplace(2, product_mode_gt_x(o, rho, 2, mu, N));
    c.series = std::move(s);
    pm.curves.push_back(std::move(c));
  }
  return pm;
}

}  // namespace bz
