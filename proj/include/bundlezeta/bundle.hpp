#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bundlezeta/zeta.hpp"

namespace bz {

// Fiber data over one simple orbit delta: the pull-back is the mapping torus
// of psi_delta, H_1 = K + Z_l with K = coker(1 - m1).
struct BundleOrbitData {
  IntMatrix m1;                      // psi_delta on H_1(F)
  std::vector<RingMatrix> lifts;     // m~_0, m~_1 (, m~_2) over Z[K]
  GroupHom incl;                     // mapping_torus_h1(m1).group -> H_1(V)
  std::optional<IntMatrix> psi;      // linear torus map realising m1, when known
  std::shared_ptr<const MappingTorusH1> h1;  // of T_{m1}; recomputed when absent
};

struct BundleSpec {
  int fiber_genus = 1;
  int fiber_boundary = 0;
  GroupPtr h1v, h1y;
  GroupHom proj;  // H_1(V) -> H_1(Y)
  std::map<std::string, BundleOrbitData> orbits;  // keyed by orbit label

  bool closed_fiber() const { return fiber_boundary == 0; }
  // ranks of H_0, H_1 (, H_2) of the fiber
  std::vector<std::size_t> ranks() const;
};

// Checks shapes, augmentations, proj(incl(l)) = [delta] and proj(incl(K)) = 0
// for every orbit of the catalog up to period N (all orbits when N < 0).
void validate_bundle(const BundleSpec& b, const OrbitCatalog& catalog, int N = -1);

// H_1(V) + H_1(Y) together with p: z_b -> z_b t_{proj b}.
struct BundleRing {
  DirectSum sum;
  GroupHom p;  // H_1(V) -> sum.group
};
BundleRing bundle_ring(const BundleSpec& b);

// rho_i^pi([delta]) over Z[H_1(V) + H_1(Y)], i = 0..
std::vector<RingMatrix> rho_pi_matrices(const BundleSpec& b, const BundleRing& ring, const std::string& label);
std::vector<RingMatrix> rho_pi_matrices(const BundleSpec& b, const std::string& label);

// Local factor zeta_delta(pi, t_[delta] t^p) by four independent routes.
// trace: exp(sum_m eps(delta^m) sum_i (-1)^i tr(rho_i^m) t^{pm} / m)
GradedSeries pi_local_trace(const OrbitRecord& o, const std::vector<RingMatrix>& rho, int N);
// theorem: prod_i twisted_local_zeta(rho_i)^{(-1)^i}
RationalForm pi_local_theorem(const OrbitRecord& o, const std::vector<RingMatrix>& rho, int N = -1);
// proposition: tau_V, tau_V^{-1} or tau_V(-u)^{-1} with u = t_[delta] t^p
RationalForm pi_local_proposition(const OrbitRecord& o, const BundleSpec& b, const BundleRing& ring, int N = -1);
// definition: product over simple orbits gamma of psi_delta (torus fibers only)
GradedSeries pi_local_direct(const OrbitRecord& o, const BundleSpec& b, const BundleRing& ring, int N);

// tau_V(pi^* delta, s) = prod_i det(1 - s z_{l_V} incl_* m~_i)^{(-1)^{i+1}} over Z[H_1(V)]
// With max_degree >= 0 the determinants are truncated there.
RationalForm local_torsion_v(const BundleSpec& b, const std::string& label, int max_degree = -1);

// Product of the trace-route local factors over the catalog, truncated at N.
GradedSeries pi_twisted_zeta(const OrbitCatalog& catalog, const BundleSpec& b, int N);
// prod_i twisted_zeta(rho_i^pi)^{(-1)^i}, through the closed forms.
GradedSeries pi_twisted_zeta_theorem_route(const OrbitCatalog& catalog, const BundleSpec& b, int N);

// h applied entrywise to rho_i^pi([delta]); h is defined on H_1(V) + H_1(Y).
RingMatrix bundled_specialize(const BundleSpec& b, const std::string& label, int i, const GroupHom& h);

// prod over orbits of h(Delta_i,V) per kind, the local-torsion side of the
// bundled-representation product formula.
GradedSeries bundled_torsion_local(const OrbitCatalog& catalog, const BundleSpec& b, int i, const GroupHom& h, int N);

// Trivial disk bundle D^2 x Y -> Y: H_1(V) = H_1(Y), proj = identity.
BundleSpec disk_bundle(const OrbitCatalog& catalog);

// Orbit data for H_1(V) = H_1(Y) + E (as `ds`): incl(l) = ([delta], e_l) and
// K -> E through k_to_e (E.ncoords x K.ncoords, K = coker(1 - m1)).
BundleOrbitData bundle_orbit_data(const IntMatrix& m1, std::vector<RingMatrix> lifts, const Coords& delta,
                                  const DirectSum& ds, const Coords& e_l, const IntMatrix& k_to_e);
// Same, with H_1 of the mapping torus of m1 already at hand.
BundleOrbitData bundle_orbit_data(const IntMatrix& m1, std::shared_ptr<const MappingTorusH1> h1, std::vector<RingMatrix> lifts,
                                  const Coords& delta, const DirectSum& ds, const Coords& e_l, const IntMatrix& k_to_e);

// Torus-fiber bundle whose monodromy over each orbit is a linear map, with
// incl(l) = ([delta], e_l) in H_1(Y) + E and K sent into E by `k_to_e`.
struct TorusFiberChoice {
  IntMatrix psi;
  Coords e_l;
  IntMatrix k_to_e;  // E.ncoords x K.ncoords
};
BundleSpec torus_fiber_bundle(const OrbitCatalog& catalog, const GroupPtr& E,
                              const std::map<std::string, TorusFiberChoice>& choice);

}  // namespace bz
