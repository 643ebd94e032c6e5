#pragma once

#include <vector>

#include "bundlezeta/series.hpp"

namespace bz {

// Square matrix over Z[G] (Q-coefficients allowed).
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(GroupPtr g, std::size_t n);

  static RingMatrix identity(GroupPtr g, std::size_t n);
  static RingMatrix from_int(GroupPtr g, const IntMatrix& m);

  const GroupPtr& group() const { return g_; }
  std::size_t dim() const { return n_; }
  GroupRingElement& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const GroupRingElement& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  RingMatrix operator*(const RingMatrix& o) const;
  RingMatrix operator+(const RingMatrix& o) const;
  RingMatrix operator-(const RingMatrix& o) const;
  RingMatrix operator*(const GroupRingElement& c) const;
  bool operator==(const RingMatrix& o) const;

  GroupRingElement trace() const;
  RingMatrix power(unsigned k) const;
  RingMatrix pushforward(const GroupHom& h) const;
  // Entrywise augmentation; throws unless the result is integral.
  IntMatrix augmentation() const;

 private:
  GroupPtr g_;
  std::size_t n_ = 0;
  std::vector<GroupRingElement> a_;
};

RingMatrix matrix_power(const RingMatrix& m, unsigned k);
GroupRingElement trace(const RingMatrix& m);

// Coefficients (c_0 = 1, c_1, ..., c_n) of det(x*1 - M) = sum c_k x^{n-k},
// by Berkowitz's division-free recursion.
// With max_k only c_0..c_max_k are computed.
std::vector<GroupRingElement> berkowitz(const RingMatrix& m, std::size_t max_k = static_cast<std::size_t>(-1));

GroupRingElement det_divfree(const RingMatrix& m);

// det(1 - t*M) as a polynomial in t; max_degree >= 0 truncates.
Poly char_series(const RingMatrix& m, int max_degree = -1);

}  // namespace bz
