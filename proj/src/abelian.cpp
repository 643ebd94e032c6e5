#include "bundlezeta/abelian.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace bz {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
    for (long v : r) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols_if_empty) {
  std::size_t c = rows.empty() ? cols_if_empty : rows[0].size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw PreconditionError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix product: dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix sum: dimension mismatch");
  IntMatrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix difference: dimension mismatch");
  IntMatrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

IntMatrix IntMatrix::power(unsigned k) const {
  if (!square()) throw PreconditionError("matrix power of a non-square matrix");
  IntMatrix result = identity(rows_), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Integer IntMatrix::trace() const {
  if (!square()) throw PreconditionError("trace of a non-square matrix");
  Integer t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Integer IntMatrix::det() const {
  if (!square()) throw PreconditionError("determinant of a non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m(*this);
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- Smith form

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row dst += q * row src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) mpz_addmul(m(dst, j).get_mpz_t(), q.get_mpz_t(), m(src, j).get_mpz_t());
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) mpz_addmul(m(i, dst).get_mpz_t(), q.get_mpz_t(), m(i, src).get_mpz_t());
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  SmithForm s{IntMatrix::identity(m), M, IntMatrix::identity(n)};
  IntMatrix& D = s.D;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi == m || mpz_cmpabs(D(i, j).get_mpz_t(), D(pi, pj).get_mpz_t()) < 0)) pi = i, pj = j;
      if (pi == m) return s;  // remaining block is zero
      swap_rows(D, t, pi), swap_rows(s.U, t, pi);
      swap_cols(D, t, pj), swap_cols(s.V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = -floor_div(D(i, t), D(t, t));
        add_row(D, i, t, q), add_row(s.U, i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = -floor_div(D(t, j), D(t, t));
        add_col(D, j, t, q), add_col(s.V, j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest of the block
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            add_row(D, t, i, 1), add_row(s.U, t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < m; ++j) s.U(t, j) = -s.U(t, j);
    }
  }
  return s;
}

IntMatrix column_hermite_form(const IntMatrix& M) {
  if (!M.square() || M.det() == 0) throw PreconditionError("column_hermite_form: need a full-rank square matrix");
  IntMatrix H(M);
  const std::size_t n = H.rows();
  for (std::size_t i = 0; i < n; ++i) {
    // clear H(i, j) for j > i with column gcd steps
    for (;;) {
      std::size_t p = n;
      for (std::size_t j = i; j < n; ++j)
        if (H(i, j) != 0 && (p == n || mpz_cmpabs(H(i, j).get_mpz_t(), H(i, p).get_mpz_t()) < 0)) p = j;
      swap_cols(H, i, p);
      bool done = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (H(i, j) == 0) continue;
        add_col(H, j, i, -floor_div(H(i, j), H(i, i)));
        if (H(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (H(i, i) < 0)
      for (std::size_t r = 0; r < n; ++r) H(r, i) = -H(r, i);
    for (std::size_t j = 0; j < i; ++j) add_col(H, j, i, -floor_div(H(i, j), H(i, i)));
  }
  return H;
}

// ---------------------------------------------------------------- checked ints

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw PreconditionError("group coordinate overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw PreconditionError("group coordinate overflow");
  return r;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw PreconditionError("integer does not fit a group coordinate: " + z.get_str());
  return z.get_si();
}

namespace {
std::int64_t mod_floor(std::int64_t a, std::int64_t d) {
  std::int64_t r = a % d;
  return r < 0 ? r + d : r;
}
}  // namespace

// ---------------------------------------------------------------- groups

FGAbelianGroup::FGAbelianGroup(std::size_t rank, std::vector<std::int64_t> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw PreconditionError("torsion invariant factors must be >= 2");
    if (i + 1 < torsion_.size() && torsion_[i + 1] % torsion_[i] != 0)
      throw PreconditionError("torsion invariant factors must form a divisibility chain");
  }
}

Coords FGAbelianGroup::reduce(Coords c) const {
  if (c.size() != ncoords()) throw PreconditionError("element has wrong number of coordinates for " + str());
  for (std::size_t i = 0; i < torsion_.size(); ++i) c[rank_ + i] = mod_floor(c[rank_ + i], torsion_[i]);
  return c;
}

Coords FGAbelianGroup::add(const Coords& a, const Coords& b) const {
  Coords r(a.size());
  for (std::size_t i = 0; i < rank_; ++i) r[i] = checked_add(a[i], b[i]);
  for (std::size_t i = rank_; i < a.size(); ++i) {
    std::int64_t s = a[i] + b[i], d = torsion_[i - rank_];
    r[i] = s >= d ? s - d : s;
  }
  return r;
}

Coords FGAbelianGroup::neg(const Coords& a) const {
  Coords r(a.size());
  for (std::size_t i = 0; i < rank_; ++i) r[i] = checked_mul(a[i], -1);
  for (std::size_t i = rank_; i < a.size(); ++i) r[i] = a[i] == 0 ? 0 : torsion_[i - rank_] - a[i];
  return r;
}

Coords FGAbelianGroup::scale(const Coords& a, std::int64_t k) const {
  Coords r(a.size());
  for (std::size_t i = 0; i < rank_; ++i) r[i] = checked_mul(a[i], k);
  for (std::size_t i = rank_; i < a.size(); ++i) {
    std::int64_t d = torsion_[i - rank_];
    r[i] = static_cast<std::int64_t>(mod_floor(static_cast<std::int64_t>((static_cast<__int128>(a[i]) * (k % d)) % d), d));
  }
  return r;
}

bool FGAbelianGroup::is_zero(const Coords& a) const {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
}

void FGAbelianGroup::check(const Coords& a) const {
  if (a.size() != ncoords()) throw PreconditionError("element has wrong number of coordinates for " + str());
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    if (a[rank_ + i] < 0 || a[rank_ + i] >= torsion_[i]) throw PreconditionError("unreduced torsion coordinate");
}

std::string FGAbelianGroup::str() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank_) {
    os << "Z";
    if (rank_ > 1) os << '^' << rank_;
    first = false;
  }
  for (auto d : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

GroupPtr make_group(std::size_t rank, std::vector<std::int64_t> torsion) {
  return std::make_shared<const FGAbelianGroup>(rank, std::move(torsion));
}

GroupPtr trivial_group() {
  static const GroupPtr g = make_group(0);
  return g;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* what) {
  if (!same_group(a, b))
    throw PreconditionError(std::string(what) + ": group mismatch (" + (a ? a->str() : "null") + " vs " +
                            (b ? b->str() : "null") + ")");
}

// ---------------------------------------------------------------- elements

GroupElement::GroupElement(GroupPtr g, Coords c) : g_(std::move(g)), c_(g_->reduce(std::move(c))) {}

GroupElement GroupElement::zero(GroupPtr g) {
  Coords c = g->zero();
  return GroupElement(std::move(g), std::move(c));
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  require_same_group(g_, o.g_, "element sum");
  GroupElement r;
  r.g_ = g_;
  r.c_ = g_->add(c_, o.c_);
  return r;
}

GroupElement GroupElement::operator-() const {
  GroupElement r;
  r.g_ = g_;
  r.c_ = g_->neg(c_);
  return r;
}

GroupElement GroupElement::operator-(const GroupElement& o) const { return *this + (-o); }

GroupElement GroupElement::operator*(std::int64_t k) const {
  GroupElement r;
  r.g_ = g_;
  r.c_ = g_->scale(c_, k);
  return r;
}

bool GroupElement::operator==(const GroupElement& o) const { return same_group(g_, o.g_) && c_ == o.c_; }

std::string GroupElement::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- homs

GroupHom::GroupHom(GroupPtr source, GroupPtr target, IntMatrix matrix)
    : src_(std::move(source)), dst_(std::move(target)), m_(std::move(matrix)) {
  if (m_.rows() != dst_->ncoords() || m_.cols() != src_->ncoords())
    throw PreconditionError("hom matrix has shape " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) +
                            ", expected " + std::to_string(dst_->ncoords()) + "x" + std::to_string(src_->ncoords()));
  for (std::size_t j = src_->rank(); j < src_->ncoords(); ++j) {
    Integer d = src_->modulus(j);
    for (std::size_t i = 0; i < dst_->ncoords(); ++i) {
      Integer v = d * m_(i, j);
      std::int64_t e = dst_->modulus(i);
      bool ok = e == 0 ? v == 0 : mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(e)) != 0;
      if (!ok) throw PreconditionError("hom is not well defined on torsion generator " + std::to_string(j));
    }
  }
  has_small_ = true;
  small_.resize(m_.rows() * m_.cols());
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      if (!m_(i, j).fits_slong_p()) {
        has_small_ = false;
        break;
      }
      small_[i * m_.cols() + j] = m_(i, j).get_si();
    }
}

GroupHom GroupHom::identity(GroupPtr g) {
  std::size_t n = g->ncoords();
  return GroupHom(g, g, IntMatrix::identity(n));
}

GroupHom GroupHom::zero(GroupPtr source, GroupPtr target) {
  std::size_t r = target->ncoords(), c = source->ncoords();
  return GroupHom(std::move(source), std::move(target), IntMatrix(r, c));
}

Coords GroupHom::apply(const Coords& c) const {
  if (c.size() != src_->ncoords()) throw PreconditionError("hom applied to element of the wrong group");
  const std::size_t R = m_.rows(), C = m_.cols();
  Coords out(R);
  if (has_small_) {
    for (std::size_t i = 0; i < R; ++i) {
      __int128 acc = 0;
      bool overflow = false;
      for (std::size_t j = 0; j < C; ++j) {
        __int128 p = static_cast<__int128>(small_[i * C + j]) * c[j];
        acc += p;
        if (acc > (static_cast<__int128>(1) << 100) || acc < -(static_cast<__int128>(1) << 100)) overflow = true;
      }
      std::int64_t e = dst_->modulus(i);
      if (e) {
        __int128 r = acc % e;
        if (r < 0) r += e;
        out[i] = static_cast<std::int64_t>(r);
      } else {
        if (overflow || acc > std::numeric_limits<std::int64_t>::max() || acc < std::numeric_limits<std::int64_t>::min())
          throw PreconditionError("group coordinate overflow");
        out[i] = static_cast<std::int64_t>(acc);
      }
    }
    return out;
  }
  for (std::size_t i = 0; i < R; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < C; ++j) acc += m_(i, j) * c[j];
    std::int64_t e = dst_->modulus(i);
    if (e) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(e));
      out[i] = r.get_si();
    } else {
      out[i] = to_int64(acc);
    }
  }
  return out;
}

GroupElement GroupHom::operator()(const GroupElement& x) const {
  require_same_group(src_, x.group(), "hom application");
  return GroupElement(dst_, apply(x.coords()));
}

GroupHom GroupHom::after(const GroupHom& first) const {
  require_same_group(first.dst_, src_, "hom composition");
  IntMatrix m = m_ * first.m_;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::int64_t e = dst_->modulus(i);
    if (!e) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_fdiv_r_ui(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), e);
  }
  return GroupHom(first.src_, dst_, std::move(m));
}

bool GroupHom::operator==(const GroupHom& o) const {
  if (!same_group(src_, o.src_) || !same_group(dst_, o.dst_)) return false;
  for (std::size_t j = 0; j < src_->ncoords(); ++j) {
    Coords e = src_->zero();
    e[j] = 1;
    if (apply(e) != o.apply(e)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- cokernels

Cokernel cokernel(const IntMatrix& M, std::size_t n) {
  if (M.rows() != n) throw PreconditionError("cokernel: matrix has " + std::to_string(M.rows()) + " rows, expected " + std::to_string(n));
  SmithForm s = smith_normal_form(M);
  std::size_t r = 0;
  while (r < std::min(M.rows(), M.cols()) && s.D(r, r) != 0) ++r;
  std::vector<std::size_t> keep;  // rows of U, free ones first
  std::vector<std::int64_t> torsion;
  for (std::size_t i = r; i < n; ++i) keep.push_back(i);
  const std::size_t rank = keep.size();
  for (std::size_t i = 0; i < r; ++i)
    if (s.D(i, i) != 1) {
      keep.push_back(i);
      torsion.push_back(to_int64(s.D(i, i)));
    }
  GroupPtr g = make_group(rank, torsion);
  IntMatrix P(keep.size(), n);
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t j = 0; j < n; ++j) P(a, j) = s.U(keep[a], j);
  // U is unimodular, so its inverse is integral; recover it from the SNF of U.
  SmithForm su = smith_normal_form(s.U);  // su.U * U * su.V = I  =>  U^{-1} = su.V * su.U
  IntMatrix Uinv = su.V * su.U;
  IntMatrix S(n, keep.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < keep.size(); ++a) S(i, a) = Uinv(i, keep[a]);
  return {g, GroupHom(make_group(n), g, std::move(P)), std::move(S)};
}

MappingTorusH1 mapping_torus_h1(const IntMatrix& phi1) {
  if (!phi1.square()) throw PreconditionError("mapping_torus_h1: monodromy matrix must be square");
  Integer d = phi1.det();
  if (d != 1 && d != -1) throw PreconditionError("mapping_torus_h1: monodromy matrix is not invertible over Z");
  const std::size_t n = phi1.rows();
  Cokernel ck = cokernel(IntMatrix::identity(n) - phi1, n);
  const FGAbelianGroup& C = *ck.group;
  GroupPtr h1 = make_group(C.rank() + 1, C.torsion());
  std::size_t mu = C.rank();
  IntMatrix inc(h1->ncoords(), C.ncoords());
  for (std::size_t j = 0; j < C.ncoords(); ++j) inc(j < mu ? j : j + 1, j) = 1;
  IntMatrix w(1, h1->ncoords());
  w(0, mu) = 1;
  GroupHom coker_inc(ck.group, h1, std::move(inc));
  return {h1, GroupHom(h1, make_group(1), std::move(w)), coker_inc.after(ck.projection), coker_inc, ck.group, mu};
}

DirectSum direct_sum(const GroupPtr& G, const GroupPtr& H) {
  const std::size_t ng = G->ncoords(), nh = H->ncoords();
  // Generators: G coordinates then H coordinates. Target coordinate of each.
  std::vector<std::int64_t> tors;
  std::vector<std::pair<std::int64_t, std::size_t>> tsrc;  // (modulus, source generator)
  for (std::size_t j = G->rank(); j < ng; ++j) tsrc.push_back({G->modulus(j), j});
  for (std::size_t j = H->rank(); j < nh; ++j) tsrc.push_back({H->modulus(j), ng + j});
  std::stable_sort(tsrc.begin(), tsrc.end(), [](auto& a, auto& b) { return a.first < b.first; });
  bool chain = true;
  for (std::size_t i = 0; i + 1 < tsrc.size(); ++i)
    if (tsrc[i + 1].first % tsrc[i].first != 0) chain = false;

  const std::size_t n = ng + nh;
  GroupPtr S;
  IntMatrix P, Sec;  // Z^n -> S, and lifts S -> Z^n
  if (chain) {
    for (auto& t : tsrc) tors.push_back(t.first);
    S = make_group(G->rank() + H->rank(), tors);
    P = IntMatrix(S->ncoords(), n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < G->rank(); ++j) P(row++, j) = 1;
    for (std::size_t j = 0; j < H->rank(); ++j) P(row++, ng + j) = 1;
    for (auto& t : tsrc) P(row++, t.second) = 1;
    Sec = P.transpose();
  } else {
    IntMatrix rel(n, n);
    for (std::size_t j = 0; j < ng; ++j) rel(j, j) = G->modulus(j);
    for (std::size_t j = 0; j < nh; ++j) rel(ng + j, ng + j) = H->modulus(j);
    Cokernel ck = cokernel(rel, n);
    S = ck.group;
    P = ck.projection.matrix();
    Sec = ck.section;
  }
  IntMatrix i1(S->ncoords(), ng), i2(S->ncoords(), nh), p1(ng, S->ncoords()), p2(nh, S->ncoords());
  for (std::size_t r = 0; r < S->ncoords(); ++r) {
    for (std::size_t j = 0; j < ng; ++j) i1(r, j) = P(r, j);
    for (std::size_t j = 0; j < nh; ++j) i2(r, j) = P(r, ng + j);
  }
  for (std::size_t c = 0; c < S->ncoords(); ++c) {
    for (std::size_t j = 0; j < ng; ++j) p1(j, c) = Sec(j, c);
    for (std::size_t j = 0; j < nh; ++j) p2(j, c) = Sec(ng + j, c);
  }
  return {S, GroupHom(G, S, std::move(i1)), GroupHom(H, S, std::move(i2)), GroupHom(S, G, std::move(p1)),
          GroupHom(S, H, std::move(p2))};
}

}  // namespace bz
