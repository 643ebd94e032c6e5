#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bundlezeta/abelian.hpp"

namespace bz {

// A rational number held as a machine integer while it is one and fits.
// Canonical, so equal values compare equal whatever their history.
class Coef {
 public:
  Coef() = default;
  Coef(std::int64_t v) : s_(v) {}  // NOLINT: implicit on purpose
  Coef(const Rational& q);         // NOLINT
  Coef(const Coef& o) : s_(o.s_), b_(o.b_ ? std::make_unique<Rational>(*o.b_) : nullptr) {}
  Coef(Coef&&) noexcept = default;
  Coef& operator=(const Coef& o) {
    if (this != &o) {
      s_ = o.s_;
      b_ = o.b_ ? std::make_unique<Rational>(*o.b_) : nullptr;
    }
    return *this;
  }
  Coef& operator=(Coef&&) noexcept = default;

  bool is_zero() const { return !b_ && s_ == 0; }
  bool is_integer() const { return !b_ || b_->get_den() == 1; }
  bool is_small() const { return !b_; }
  std::int64_t small() const { return s_; }
  Rational value() const { return b_ ? *b_ : Rational(s_); }
  operator Rational() const { return value(); }  // NOLINT

  Coef& operator+=(const Coef& o);
  Coef& operator*=(const Coef& o);
  Coef operator*(const Coef& o) const { return Coef(*this) *= o; }
  Coef operator-() const;
  bool operator==(const Coef& o) const { return b_ ? (o.b_ && *b_ == *o.b_) : (!o.b_ && s_ == o.s_); }
  bool operator!=(const Coef& o) const { return !(*this == o); }

 private:
  std::int64_t s_ = 0;
  std::unique_ptr<Rational> b_;  // only when the value is not a small integer
};

// Finite Q-linear combination of monomials t_g, g in an FGAbelianGroup.
class GroupRingElement {
 public:
  // sorted by coordinates, no zero coefficients
  using Terms = std::vector<std::pair<Coords, Coef>>;

  GroupRingElement() = default;
  explicit GroupRingElement(GroupPtr g) : g_(std::move(g)) {}

  static GroupRingElement zero(GroupPtr g) { return GroupRingElement(std::move(g)); }
  static GroupRingElement constant(GroupPtr g, const Rational& c);
  static GroupRingElement one(GroupPtr g) { return constant(std::move(g), 1); }
  static GroupRingElement monomial(GroupPtr g, Coords c, const Rational& coef = 1);
  static GroupRingElement monomial(const GroupElement& e, const Rational& coef = 1);

  const GroupPtr& group() const { return g_; }
  const Terms& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  // +-1 times a single monomial.
  bool is_unit() const;
  GroupRingElement unit_inverse() const;
  bool is_integral() const;
  Rational coefficient(const Coords& c) const;
  Rational augmentation() const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement operator+(const GroupRingElement& o) const { return GroupRingElement(*this) += o; }
  GroupRingElement operator-(const GroupRingElement& o) const { return GroupRingElement(*this) -= o; }
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement operator*(const Rational& c) const;
  // this += a * b, without building the product first
  void add_product(const GroupRingElement& a, const GroupRingElement& b, const Rational& scale = 1);
  bool operator==(const GroupRingElement& o) const { return same_group(g_, o.g_) && t_ == o.t_; }
  bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

  GroupRingElement pushforward(const GroupHom& h) const;
  // Multiply every monomial by t_g.
  GroupRingElement shifted(const Coords& g) const;

  void add_term(const Coords& c, const Coef& coef);

 private:
  GroupPtr g_;
  Terms t_;
};

// Polynomial in t with group-ring coefficients. When weight_graded is set the
// index is a weight read off the monomials (after t was set to one).
class Poly {
 public:
  Poly() = default;
  explicit Poly(GroupPtr g, bool weight_graded = false) : g_(std::move(g)), weighted_(weight_graded) {}
  Poly(GroupPtr g, std::vector<GroupRingElement> coeffs, bool weight_graded = false);

  static Poly one(GroupPtr g, bool weight_graded = false);
  static Poly monomial(const GroupRingElement& c, int degree, bool weight_graded = false);
  // 1 - coef * t_g * t^k
  static Poly one_minus(const GroupRingElement& c, int degree, bool weight_graded = false);

  const GroupPtr& group() const { return g_; }
  bool weight_graded() const { return weighted_; }
  const std::vector<GroupRingElement>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  int valuation() const;
  GroupRingElement coeff(int k) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const GroupRingElement& c) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // t -> t^k
  Poly stretched(int k) const;
  // t -> -t
  Poly negated_variable() const;
  // drop t^v from the bottom; requires valuation >= v
  Poly shifted_down(int v) const;
  Poly pushforward(const GroupHom& h) const;
  bool is_integral() const;

 private:
  void trim();
  GroupPtr g_;
  std::vector<GroupRingElement> c_;
  bool weighted_ = false;
};

class GradedSeries {
 public:
  GradedSeries() = default;
  GradedSeries(GroupPtr g, int N, bool weight_graded = false);

  static GradedSeries one(GroupPtr g, int N, bool weight_graded = false);
  static GradedSeries from_poly(const Poly& p, int N);

  const GroupPtr& group() const { return g_; }
  int truncation() const { return N_; }
  bool weight_graded() const { return weighted_; }
  const std::vector<GroupRingElement>& coeffs() const { return c_; }
  const GroupRingElement& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  GroupRingElement& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }

  GradedSeries operator+(const GradedSeries& o) const;
  GradedSeries operator-(const GradedSeries& o) const;
  GradedSeries operator-() const;
  GradedSeries operator*(const GradedSeries& o) const;
  GradedSeries operator*(const Rational& c) const;
  GradedSeries& operator*=(const GradedSeries& o) { return *this = *this * o; }
  bool operator==(const GradedSeries& o) const;
  bool operator!=(const GradedSeries& o) const { return !(*this == o); }

  GradedSeries inverse() const;
  GradedSeries exp() const;
  GradedSeries log() const;
  GradedSeries pow(long k) const;
  GradedSeries truncated(int N) const;
  GradedSeries pushforward(const GroupHom& h) const;
  bool is_integral() const;

 private:
  void check_compatible(const GradedSeries& o, const char* what) const;
  GroupPtr g_;
  int N_ = 0;
  std::vector<GroupRingElement> c_;
  bool weighted_ = false;
};

// num / den. den needs a unit as its lowest nonzero coefficient, and num must
// vanish to at least the same order (the common power of t is cancelled).
class RationalForm {
 public:
  RationalForm() = default;
  explicit RationalForm(Poly num);
  RationalForm(Poly num, Poly den);

  static RationalForm one(GroupPtr g, bool weight_graded = false) { return RationalForm(Poly::one(std::move(g), weight_graded)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const GroupPtr& group() const { return num_.group(); }
  bool weight_graded() const { return num_.weight_graded(); }

  GradedSeries expand(int N) const;
  RationalForm operator*(const RationalForm& o) const;
  RationalForm operator/(const RationalForm& o) const;
  RationalForm inverse() const;
  RationalForm pow(int k) const;
  RationalForm pushforward(const GroupHom& h) const;
  // exact identity by cross multiplication
  bool equals(const RationalForm& o) const;

 private:
  Poly num_, den_;
};

enum class TValue { Keep, SetToOne };

// Push every monomial through h. With SetToOne the t-degree is dropped and
// the series is re-graded by mu_weight (a hom from h's target to Z); every
// monomial's weight must equal its t-degree.
GradedSeries specialize(const GradedSeries& s, const GroupHom& h, TValue tv,
                        const std::optional<GroupHom>& mu_weight = std::nullopt);
RationalForm specialize(const RationalForm& r, const GroupHom& h, TValue tv,
                        const std::optional<GroupHom>& mu_weight = std::nullopt);
Poly specialize(const Poly& p, const GroupHom& h, TValue tv, const std::optional<GroupHom>& mu_weight = std::nullopt);

Rational coefficient_of(const GradedSeries& s, const Coords& g, int k);

// Throws IntegralityError naming `what` unless all coefficients are integers.
void assert_integral(const GradedSeries& s, const std::string& what);
void assert_integral(const Poly& p, const std::string& what);

struct RenderOptions {
  // Rank-one free coefficient group printed as powers of `var` (t_(k) -> t^k).
  bool single_variable = false;
  std::string var = "t";
  bool show_truncation = true;
};

std::string render(const Rational& q);
std::string render(const GroupRingElement& x, const RenderOptions& opt = {});
std::string render(const Poly& p, const RenderOptions& opt = {});
std::string render(const GradedSeries& s, const RenderOptions& opt = {});
std::string render(const RationalForm& r, const RenderOptions& opt = {});

}  // namespace bz
