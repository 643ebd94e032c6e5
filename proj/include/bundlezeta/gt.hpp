#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bundlezeta/bundle.hpp"

namespace bz {

struct ClassLattice {
  GroupPtr group;            // H_2(X); Q and c1 read the free coordinates
  IntMatrix Q;               // rank x rank, symmetric
  std::vector<Integer> c1;   // <c_1(TX), e_j> for the free generators
  GroupHom weight;           // group -> Z, positive on curve classes; grades the series

  Integer dot(const Coords& a, const Coords& b) const;
  Integer c1_of(const Coords& a) const;
  void check() const;
};

enum class ClassKind { S2, T2, Other };
std::string to_string(ClassKind k);

struct ClassInvariants {
  Integer d, g;
  ClassKind kind = ClassKind::Other;
};
// g = 1 + (A.A - <c1,A>)/2, d = A.A + <c1,A>; odd A.A - <c1,A> is rejected.
ClassInvariants class_invariants(const ClassLattice& lat, const Coords& A);
ClassKind classify(const ClassLattice& lat, const Coords& A);

// A = m B with m >= 2 and g_B = 1
bool multiply_toroidal(const ClassLattice& lat, const Coords& A);

// Largest m with A = m B, B taking the smallest nonnegative torsion solution.
struct Root {
  Coords root;
  std::int64_t multiple = 1;
};
Root toroidal_root(const ClassLattice& lat, const Coords& A);

// (epsilon, I) with I a subset of {1, 2, 3}
struct TorusType {
  int sign = 1;
  std::set<int> I;
  int s() const { return static_cast<int>(I.size()); }
};
std::string to_string(const TorusType& t);

// Attached GT_X series of a torus and of its covers 1..4 (4 = the common 4-fold cover).
struct CurveSeries {
  RationalForm curve;
  std::map<int, RationalForm> covers;
};

struct CurveRecord {
  std::string label;
  Coords cls;
  int sign = 1;
  std::optional<TorusType> torus_type;
  Integer count = 1;                     // identical copies
  std::optional<GroupRingElement> gt_w;  // twisted mode, curves outside T_2
  std::optional<CurveSeries> series;     // twisted mode, tori
};

// torus_type present iff the class is in T_2, sign agreement, positive weight
void check_curves(const ClassLattice& lat, const std::vector<CurveRecord>& curves);

using Decomposition = std::vector<std::pair<Coords, int>>;  // (A_i, n_i), sorted by A_i
std::vector<Decomposition> decompositions(const ClassLattice& lat, const std::vector<Coords>& candidates, const Coords& A);

// P_{sign,s}(z) over Z, in the variable t
RationalForm taubes_p(int sign, int s);
Integer r_coeff(const RationalForm& P, int l);

Integer ruan(const std::vector<CurveRecord>& curves, const Coords& B);
// coefficient of t_{mA} in the product of P(C, t_[C]) over tori in multiples of A
Integer qu(const ClassLattice& lat, const std::vector<CurveRecord>& curves, const Coords& A, int m);

// P_pi from the attached series, exponent sign(C)
RationalForm p_pi(const CurveRecord& c);

struct CoverClass {
  int which = 0;  // 1..4
  IntMatrix matrix;
};
CoverClass cover_class(int i);
// k with iota_j o f_{iota_i *} = iota_k on the cover C_{iota_i}
int iota_pullback(int i, int j);
// Composite f_i f_{k} normalised as a lattice; always the 4-fold cover 2 * identity.
CoverClass iota_compose(int i, int j);

// Z[H_2(W) + H_2(X)] with the projection to, and t-embedding of, H_2(X).
struct TwistRing {
  GroupPtr group;
  GroupHom to_x;
  GroupHom from_x;
};

GroupRingElement ruan_pi(const TwistRing& ring, const std::vector<CurveRecord>& curves, const Coords& B);
GroupRingElement qu_pi(const ClassLattice& lat, const TwistRing& ring, const std::vector<CurveRecord>& curves,
                       const Coords& A, int m);

// Sum of GT(X, A) t_A over all A of weight <= W, weight graded over Z[H_2(X)].
GradedSeries gt(const ClassLattice& lat, const std::vector<CurveRecord>& curves, int W);
// Single classes
Rational gt_class(const ClassLattice& lat, const std::vector<CurveRecord>& curves, const Coords& A);
// Twisted version over the ring group, weight graded.
GradedSeries gt_pi(const ClassLattice& lat, const TwistRing& ring, const std::vector<CurveRecord>& curves, int W);

// S^1 x T_phi: classes [S^1] x a, one torus per simple orbit.
struct ProductMode {
  ClassLattice lat;
  std::vector<CurveRecord> curves;
  std::optional<TwistRing> ring;
};
TorusType product_mode_type(OrbitKind k);
ProductMode product_mode(const OrbitCensus& census);
ProductMode product_mode(const OrbitCatalog& catalog, const BundleSpec& b, int N);
// GT_X of the pull-back over C_{delta^k}: prod_i det(1 - rho_i^k)^{(-1)^{i+1}},
// graded by the weight `mu` (t_[delta]^k has weight k p). Truncated at W.
RationalForm product_mode_gt_x(const OrbitRecord& o, const std::vector<RingMatrix>& rho, int k, const GroupHom& mu, int W);

}  // namespace bz
