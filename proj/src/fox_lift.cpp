#include <map>
#include <utility>

#include "bundlezeta/orbits.hpp"

namespace bz {

namespace {

// Laurent polynomials in x, y over Z; key (i, j) is x^i y^j.
using Laurent = std::map<std::pair<std::int64_t, std::int64_t>, Integer>;

void add(Laurent& p, std::int64_t i, std::int64_t j, const Integer& c) {
  auto& v = p[{i, j}];
  v += c;
  if (v == 0) p.erase({i, j});
}

Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (auto& [ka, ca] : a)
    for (auto& [kb, cb] : b) add(r, ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

Laurent sum(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (auto& [k, c] : b) add(r, k.first, k.second, c);
  return r;
}

Laurent mono(std::int64_t i, std::int64_t j, const Integer& c = 1) {
  Laurent r;
  add(r, i, j, c);
  return r;
}

// S(x, a): (x - 1) S = x^a - 1. `in_x` picks the variable.
Laurent geometric(std::int64_t a, bool in_x) {
  Laurent r;
  if (a >= 0) {
    for (std::int64_t i = 0; i < a; ++i) add(r, in_x ? i : 0, in_x ? 0 : i, 1);
  } else {
    for (std::int64_t i = a; i < 0; ++i) add(r, in_x ? i : 0, in_x ? 0 : i, -1);
  }
  return r;
}

// exact division by (x - 1)
Laurent divide_by_x_minus_1(const Laurent& p) {
  std::map<std::int64_t, std::map<std::int64_t, Integer>> rows;  // y-exponent -> (x-exponent -> coeff)
  for (auto& [k, c] : p) rows[k.second][k.first] = c;
  Laurent q;
  for (auto& [j, row] : rows) {
    Integer run = 0;
    auto last = std::prev(row.end())->first;
    for (std::int64_t i = row.begin()->first; i < last; ++i) {
      auto it = row.find(i);
      if (it != row.end()) run += it->second;
      if (run != 0) add(q, i, j, -run);
    }
    run += row.rbegin()->second;
    if (run != 0) throw Error("internal: boundary chain not divisible by (x - 1)");
  }
  return q;
}

GroupRingElement push(const Laurent& p, const Cokernel& ck) {
  GroupRingElement r(ck.group);
  for (auto& [k, c] : p) r.add_term(ck.projection.apply({k.first, k.second}), Rational(c));
  return r;
}

}  // namespace

std::vector<RingMatrix> torus_lifts(const IntMatrix& A, const Cokernel& ck) {
  if (A.rows() != 2 || A.cols() != 2) throw PreconditionError("torus lift needs a 2x2 matrix");
  if (ck.projection.source()->ncoords() != 2) throw PreconditionError("torus lift needs a quotient of Z^2");
  const std::int64_t a = to_int64(A(0, 0)), b = to_int64(A(0, 1)), c = to_int64(A(1, 0)), d = to_int64(A(1, 1));

  // image of e1 (0 -> (a, c)): along x then along y; same for e2.
  Laurent m11 = geometric(a, true), m21 = mul(mono(a, 0), geometric(c, false));
  Laurent m12 = geometric(b, true), m22 = mul(mono(b, 0), geometric(d, false));

  // The lift is semilinear: g.sigma -> A(g).lift(sigma). For the square f,
  // d f = (1 - y) e1 + (x - 1) e2, so d lift(f) = (1 - A(y)) lift(e1) + (A(x) - 1) lift(e2).
  Laurent one_minus_Ay = sum(mono(0, 0), mono(b, d, -1));
  Laurent Ax_minus_one = sum(mono(a, c), mono(0, 0, -1));
  Laurent w1 = sum(mul(one_minus_Ay, m11), mul(Ax_minus_one, m12));
  Laurent w2 = sum(mul(one_minus_Ay, m21), mul(Ax_minus_one, m22));
  Laurent f = divide_by_x_minus_1(w2);
  // consistency: f (1 - y) must reproduce the e1-coefficient
  if (mul(f, sum(mono(0, 0), mono(0, 1, -1))) != w1) throw Error("internal: cellular lift of the 2-cell is inconsistent");

  RingMatrix phi0 = RingMatrix::identity(ck.group, 1);
  RingMatrix phi1(ck.group, 2);
  phi1(0, 0) = push(m11, ck), phi1(0, 1) = push(m12, ck);
  phi1(1, 0) = push(m21, ck), phi1(1, 1) = push(m22, ck);
  RingMatrix phi2(ck.group, 1);
  phi2(0, 0) = push(f, ck);
  return {phi0, phi1, phi2};
}

MonodromySpec torus_monodromy(const IntMatrix& A) {
  MonodromySpec s = MonodromySpec::closed(A);
  Cokernel ck = cokernel(IntMatrix::identity(2) - A, 2);
  s.lifts = torus_lifts(A, ck);
  s.lift_group = ck.group;
  return s;
}

}  // namespace bz
