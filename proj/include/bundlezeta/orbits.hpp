#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bundlezeta/ring_matrix.hpp"

namespace bz {

enum class OrbitKind { Elliptic, PositiveHyperbolic, NegativeHyperbolic };

// epsilon(delta^m)
int lefschetz_sign(OrbitKind k, long m);
std::string to_string(OrbitKind k);  // "elliptic" | "pos_hyp" | "neg_hyp"
OrbitKind parse_orbit_kind(const std::string& s);

struct OrbitRecord {
  std::string label;
  int period = 0;
  OrbitKind kind = OrbitKind::Elliptic;
  Coords h1_class;
};

struct OrbitCatalog {
  GroupPtr h1;
  std::size_t mu_index = 0;  // coordinate of h1 read as the intersection with the fiber
  std::vector<OrbitRecord> orbits;

  GroupHom mu_weight() const;
  // mu-coordinate equals period, classes reduced, labels unique
  void check() const;
  const OrbitRecord& find(const std::string& label) const;
};

// The same data as a multiset: (period, kind, class) -> multiplicity. This is
// what the product formulas consume, and it stays small even when millions of
// orbits share a few classes.
struct OrbitCensus {
  GroupPtr h1;
  std::size_t mu_index = 0;
  std::map<std::tuple<int, OrbitKind, Coords>, Integer> count;

  static OrbitCensus of(const OrbitCatalog& c);
  Integer total() const;
  int max_period() const;
};

struct MonodromySpec {
  IntMatrix phi0, phi1;
  std::optional<IntMatrix> phi2;  // absent when the fiber has boundary
  int genus = 0;
  int boundary = 0;
  // Lifts over Z[coker(1 - phi1)], one per present phi_i.
  std::vector<RingMatrix> lifts;
  GroupPtr lift_group;

  static MonodromySpec closed(const IntMatrix& phi1);
  static MonodromySpec bordered(const IntMatrix& phi1, int genus, int boundary);
  std::vector<const IntMatrix*> chain() const;
};

Integer lefschetz_number(const MonodromySpec& spec, unsigned n);

struct TorusOrbit {
  int period = 0;
  OrbitKind kind = OrbitKind::PositiveHyperbolic;
  Coords h1_class;                  // in mapping_torus_h1(A).group
  std::int64_t point[2] = {0, 0};   // representative point, numerators over `den`
  std::int64_t den = 1;
};

// Every simple orbit of period <= N of the linear map A on R^2/Z^2, level by
// level. A must be in SL(2,Z) with |trace| > 2.
void for_each_torus_orbit(const IntMatrix& A, int N, const std::function<void(const TorusOrbit&)>& emit);

OrbitCatalog enumerate_torus_orbits(const IntMatrix& A, int N);
OrbitCensus torus_orbit_census(const IntMatrix& A, int N);

struct FixedPoint {
  std::int64_t point[2];
  std::int64_t den;
  Coords kappa;  // class of (A^n - 1) x in coker(1 - A)
};
// All |det(A^n - 1)| fixed points of A^n, for cross-checks.
std::vector<FixedPoint> torus_fixed_points(const IntMatrix& A, int n);

struct LedgerLine {
  int n = 0;
  Integer orbit_side, lefschetz;
  bool ok = false;
};

struct CatalogReport {
  std::vector<LedgerLine> lines;
  bool ok = true;
  int first_bad = 0;  // 0 when ok
};

CatalogReport validate_orbit_catalog(const OrbitCensus& census, const MonodromySpec& spec, int N);
CatalogReport validate_orbit_catalog(const OrbitCatalog& catalog, const MonodromySpec& spec, int N);

// Cellular lift of a linear torus map to R^2 (one 0-cell, two 1-cells, one
// 2-cell), with coefficients pushed to Z[coker(1 - A)], where the map becomes
// linear. Returns lifted phi_0, phi_1, phi_2.
std::vector<RingMatrix> torus_lifts(const IntMatrix& A, const Cokernel& coker);

// Closed torus monodromy with lifts attached.
MonodromySpec torus_monodromy(const IntMatrix& A);

}  // namespace bz
