#pragma once

#include <cstdint>
#include <random>

#include "bundlezeta/bundle.hpp"

namespace bz::rnd {

// Seeded source for every randomized suite; identical seeds give identical data.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : e_(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(e_); }
  bool coin() { return range(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v.at(static_cast<std::size_t>(range(0, static_cast<long>(v.size()) - 1))); }

 private:
  std::mt19937_64 e_;
};

// Product of random transvections and signed swaps: det 1.
IntMatrix random_unimodular(Rng& r, std::size_t n, int steps);
Coords random_element(Rng& r, const FGAbelianGroup& g);
// Well-defined hom matrix (dst.ncoords x src.ncoords).
IntMatrix random_hom_matrix(Rng& r, const FGAbelianGroup& src, const FGAbelianGroup& dst);
// Lift over Z[K] with the given augmentation; entries split into a few monomials.
RingMatrix random_lift(Rng& r, const IntMatrix& m, const GroupPtr& K);
// One of 0, Z/2, Z/3, Z/2 + Z/2, Z.
GroupPtr random_extra_group(Rng& r);

// Closed fiber of genus in [gmin, gmax], random monodromy, lifts and homs per orbit
// up to period N.
BundleSpec random_bundle(Rng& r, const OrbitCatalog& catalog, int N, int gmin = 1, int gmax = 3);
// Torus fibers whose monodromy is a hyperbolic linear map, so that the
// definition route applies.
BundleSpec random_torus_bundle(Rng& r, const OrbitCatalog& catalog, int N);

// Random polynomial over Z[g], constant term 1, weight-graded, degree <= deg.
Poly random_unit_poly(Rng& r, const GroupPtr& g, int deg, int terms);
RationalForm random_series(Rng& r, const GroupPtr& g, int deg);

}  // namespace bz::rnd
