#include "bundlezeta/ring_matrix.hpp"

#include <algorithm>
#include <optional>

namespace bz {

RingMatrix::RingMatrix(GroupPtr g, std::size_t n) : g_(std::move(g)), n_(n), a_(n * n, GroupRingElement(g_)) {}

RingMatrix RingMatrix::identity(GroupPtr g, std::size_t n) {
  RingMatrix m(g, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GroupRingElement::one(g);
  return m;
}

RingMatrix RingMatrix::from_int(GroupPtr g, const IntMatrix& im) {
  if (!im.square()) throw PreconditionError("ring matrix must be square");
  RingMatrix m(g, im.rows());
  for (std::size_t i = 0; i < im.rows(); ++i)
    for (std::size_t j = 0; j < im.cols(); ++j) m(i, j) = GroupRingElement::constant(g, Rational(im(i, j)));
  return m;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  require_same_group(g_, o.g_, "matrix product");
  if (n_ != o.n_) throw PreconditionError("matrix product: dimension mismatch");
  RingMatrix r(g_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const auto& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!o(k, j).is_zero()) r(i, j).add_product(x, o(k, j));
    }
  return r;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
  require_same_group(g_, o.g_, "matrix sum");
  if (n_ != o.n_) throw PreconditionError("matrix sum: dimension mismatch");
  RingMatrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
  require_same_group(g_, o.g_, "matrix difference");
  if (n_ != o.n_) throw PreconditionError("matrix difference: dimension mismatch");
  RingMatrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

RingMatrix RingMatrix::operator*(const GroupRingElement& c) const {
  RingMatrix r(*this);
  for (auto& x : r.a_) x = x * c;
  return r;
}

bool RingMatrix::operator==(const RingMatrix& o) const { return same_group(g_, o.g_) && n_ == o.n_ && a_ == o.a_; }

GroupRingElement RingMatrix::trace() const {
  GroupRingElement t(g_);
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

RingMatrix RingMatrix::power(unsigned k) const {
  if (k == 0) return identity(g_, n_);
  std::optional<RingMatrix> result;
  RingMatrix base = *this;
  while (k) {
    if (k & 1) result = result ? *result * base : base;
    k >>= 1;
    if (k) base = base * base;
  }
  return *result;
}

RingMatrix RingMatrix::pushforward(const GroupHom& h) const {
  RingMatrix r(h.target(), n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].pushforward(h);
  return r;
}

IntMatrix RingMatrix::augmentation() const {
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      Rational a = (*this)(i, j).augmentation();
      if (a.get_den() != 1) throw IntegralityError("augmentation is not integral");
      m(i, j) = a.get_num();
    }
  return m;
}

RingMatrix matrix_power(const RingMatrix& m, unsigned k) { return m.power(k); }
GroupRingElement trace(const RingMatrix& m) { return m.trace(); }

std::vector<GroupRingElement> berkowitz(const RingMatrix& A, std::size_t max_k) {
  const GroupPtr& g = A.group();
  const std::size_t n = A.dim();
  std::vector<GroupRingElement> v{GroupRingElement::one(g)};
  for (std::size_t r = 0; r < n; ++r) {
    // the Toeplitz factors are lower triangular, so entries past max_k never feed back
    const std::size_t len = max_k > r ? r + 2 : max_k + 1;
    // A_{r+1} = [[M, S], [R, a]] with M the leading r x r block.
    // Toeplitz column: 1, -a, -R S, -R M S, ..., -R M^{r-1} S.
    std::vector<GroupRingElement> col(r + 2, GroupRingElement(g));
    col[0] = GroupRingElement::one(g);
    if (len > 1) col[1] = -A(r, r);
    std::vector<GroupRingElement> w(r, GroupRingElement(g));  // M^k S
    for (std::size_t i = 0; i < r; ++i) w[i] = A(i, r);
    for (std::size_t k = 0; k < r && k + 2 < len; ++k) {
      GroupRingElement rs(g);
      for (std::size_t i = 0; i < r; ++i)
        if (!A(r, i).is_zero() && !w[i].is_zero()) rs.add_product(A(r, i), w[i]);
      col[k + 2] = -rs;
      if (k + 1 < r && k + 3 < len) {
        std::vector<GroupRingElement> nw(r, GroupRingElement(g));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            if (!A(i, j).is_zero() && !w[j].is_zero()) nw[i].add_product(A(i, j), w[j]);
        w = std::move(nw);
      }
    }
    // new vector (length r+2) = lower triangular Toeplitz(col) * v (length r+1)
    std::vector<GroupRingElement> nv(len, GroupRingElement(g));
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; j <= std::min(i, v.size() - 1); ++j)
        if (!col[i - j].is_zero() && !v[j].is_zero()) nv[i].add_product(col[i - j], v[j]);
    v = std::move(nv);
  }
  return v;
}

GroupRingElement det_divfree(const RingMatrix& m) {
  auto c = berkowitz(m);
  // det(x - M) at x = 0 is (-1)^n det M
  return (m.dim() % 2) ? -c.back() : c.back();
}

Poly char_series(const RingMatrix& m, int max_degree) {
  if (max_degree < 0) return Poly(m.group(), berkowitz(m));
  return Poly(m.group(), berkowitz(m, static_cast<std::size_t>(max_degree)));
}

}  // namespace bz
