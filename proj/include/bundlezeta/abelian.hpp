#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bundlezeta/error.hpp"

namespace bz {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(a, b) does not canonicalize; always build fractions through this.
inline Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

// Dense integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix transpose() const;
  IntMatrix power(unsigned k) const;
  Integer trace() const;
  // Bareiss elimination; exact over the integers.
  Integer det() const;

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

struct SmithForm {
  IntMatrix U, D, V;  // U * M * V == D
};

SmithForm smith_normal_form(const IntMatrix& M);

// Column Hermite normal form of a full-rank square matrix: lower triangular,
// positive diagonal, entries left of the diagonal reduced into [0, diag).
// Two matrices have the same column lattice iff their HNFs agree.
IntMatrix column_hermite_form(const IntMatrix& M);

// Element coordinates are machine integers: they are exponents of group-ring
// monomials and stay small. All arithmetic on them is overflow-checked.
using Coords = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t to_int64(const Integer& z);

class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;
  // Throws PreconditionError unless torsion is a divisibility chain of
  // entries >= 2.
  FGAbelianGroup(std::size_t rank, std::vector<std::int64_t> torsion);

  static FGAbelianGroup free(std::size_t rank) { return FGAbelianGroup(rank, {}); }

  std::size_t rank() const { return rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  std::size_t ncoords() const { return rank_ + torsion_.size(); }
  bool trivial() const { return ncoords() == 0; }
  bool finite() const { return rank_ == 0; }
  // 0 for the free coordinates.
  std::int64_t modulus(std::size_t coord) const { return coord < rank_ ? 0 : torsion_[coord - rank_]; }

  bool operator==(const FGAbelianGroup& o) const { return rank_ == o.rank_ && torsion_ == o.torsion_; }
  bool operator!=(const FGAbelianGroup& o) const { return !(*this == o); }

  Coords zero() const { return Coords(ncoords(), 0); }
  Coords reduce(Coords c) const;
  Coords add(const Coords& a, const Coords& b) const;
  Coords neg(const Coords& a) const;
  Coords scale(const Coords& a, std::int64_t k) const;
  bool is_zero(const Coords& a) const;
  void check(const Coords& a) const;  // length and reduced-ness

  std::string str() const;  // "Z^2 + Z/2 + Z/4" style

 private:
  std::size_t rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

using GroupPtr = std::shared_ptr<const FGAbelianGroup>;

GroupPtr make_group(std::size_t rank, std::vector<std::int64_t> torsion = {});
GroupPtr trivial_group();
bool same_group(const GroupPtr& a, const GroupPtr& b);
void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* what);

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(GroupPtr g, Coords c);
  static GroupElement zero(GroupPtr g);

  const GroupPtr& group() const { return g_; }
  const Coords& coords() const { return c_; }

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement operator*(std::int64_t k) const;
  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const { return c_ < o.c_; }
  bool is_zero() const { return g_->is_zero(c_); }

  std::string str() const;

 private:
  GroupPtr g_;
  Coords c_;
};

class GroupHom {
 public:
  GroupHom() = default;
  // matrix is target.ncoords x source.ncoords. Well-definedness is checked.
  GroupHom(GroupPtr source, GroupPtr target, IntMatrix matrix);

  static GroupHom identity(GroupPtr g);
  static GroupHom zero(GroupPtr source, GroupPtr target);

  const GroupPtr& source() const { return src_; }
  const GroupPtr& target() const { return dst_; }
  const IntMatrix& matrix() const { return m_; }

  Coords apply(const Coords& c) const;
  GroupElement operator()(const GroupElement& x) const;
  // (this ∘ first)
  GroupHom after(const GroupHom& first) const;
  bool operator==(const GroupHom& o) const;

 private:
  GroupPtr src_, dst_;
  IntMatrix m_;
  std::vector<std::int64_t> small_;  // int64 copy of m_ when it fits, for the hot path
  bool has_small_ = false;
};

struct Cokernel {
  GroupPtr group;
  GroupHom projection;  // from Z^n
  // n x ncoords(group): column j is a lift to Z^n of the j-th generator.
  IntMatrix section;
};

// Z^n / im(M) for an n x k matrix M.
Cokernel cokernel(const IntMatrix& M, std::size_t n);

struct MappingTorusH1 {
  GroupPtr group;          // coker(1 - phi1) + Z_mu, the mu coordinate last among free ones
  GroupHom mu_weight;      // to Z
  GroupHom fiber_class;    // Z^{2g} -> group, through coker(1 - phi1)
  GroupHom coker_inclusion;  // coker(1 - phi1) -> group
  GroupPtr coker;
  std::size_t mu_index = 0;
};

MappingTorusH1 mapping_torus_h1(const IntMatrix& phi1);

struct DirectSum {
  GroupPtr group;
  GroupHom inj1, inj2, proj1, proj2;
};

// Canonical (invariant factor) form of G + H together with the structure maps.
DirectSum direct_sum(const GroupPtr& G, const GroupPtr& H);

}  // namespace bz
