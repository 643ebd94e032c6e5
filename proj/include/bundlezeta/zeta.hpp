#pragma once

#include <map>
#include <string>

#include "bundlezeta/orbits.hpp"

namespace bz {

enum class ZetaVariant { Plain, TotalAbelian };

// Closed-form local factor in the variable u = coeff * t^degree.
RationalForm local_zeta(OrbitKind kind, const GroupRingElement& coeff, int degree);

// Product of local factors over the orbits, truncated at N. Plain variant
// lands in Z (trivial group), total-Abelian in Z[H_1(T_phi)].
GradedSeries zeta_orbit_route(const OrbitCensus& census, int N, ZetaVariant v);
GradedSeries zeta_orbit_route(const OrbitCatalog& catalog, int N, ZetaVariant v);

// prod_i det(1 - t phi_i)^{(-1)^{i+1}}; the total-Abelian variant uses
// t_mu * lifted phi_i over Z[H_1(T_phi)].
RationalForm zeta_det_route(const MonodromySpec& spec, ZetaVariant v);

// exp(sum_n L(phi^n) t^n / n), with the total-Abelian Lefschetz numbers for
// that variant.
GradedSeries zeta_exp_route(const MonodromySpec& spec, int N, ZetaVariant v);

// Coefficient group of the total-Abelian variant and the lifted matrices
// t_mu * phi~_i pushed into it.
struct TotalAbelianData {
  MappingTorusH1 h1;
  std::vector<RingMatrix> matrices;
};
TotalAbelianData total_abelian_matrices(const MonodromySpec& spec);

// det(1 - t * t_mu * phi~_i)
Poly alexander_polynomial(int i, const MonodromySpec& spec);

struct RepresentationAssignment {
  GroupPtr group;
  std::map<std::string, RingMatrix> rho;  // keyed by orbit label
};

// Closed form: elliptic det(1 - t^p rho)^{-1}, positive hyperbolic
// det(1 - t^p rho), negative hyperbolic det(1 + t^p rho). With N >= 0 the
// determinant is only computed up to t^N, enough for expand(N).
RationalForm twisted_local_zeta(OrbitKind kind, const RingMatrix& rho, int period, int N = -1);
// exp(sum_m eps(delta^m) tr(rho^m) t^{pm} / m)
GradedSeries twisted_local_zeta_trace(OrbitKind kind, const RingMatrix& rho, int period, int N);

// With verify set every closed form is compared with the trace route.
GradedSeries twisted_zeta(const OrbitCatalog& catalog, const RepresentationAssignment& rep, int N, bool verify = false);

}  // namespace bz
