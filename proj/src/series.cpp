#include "bundlezeta/series.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace bz {

// ---------------------------------------------------------------- GroupRingElement

// ---------------------------------------------------------------- Coef

namespace {

std::unique_ptr<Rational> big_or_null(Rational q, std::int64_t& small) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
    small = q.get_num().get_si();
    return nullptr;
  }
  small = 0;
  return std::make_unique<Rational>(std::move(q));
}

}  // namespace

Coef::Coef(const Rational& q) { b_ = big_or_null(q, s_); }

Coef& Coef::operator+=(const Coef& o) {
  std::int64_t r;
  if (!b_ && !o.b_ && !__builtin_add_overflow(s_, o.s_, &r)) {
    s_ = r;
    return *this;
  }
  b_ = big_or_null(value() + o.value(), s_);
  return *this;
}

Coef& Coef::operator*=(const Coef& o) {
  std::int64_t r;
  if (!b_ && !o.b_ && !__builtin_mul_overflow(s_, o.s_, &r)) {
    s_ = r;
    return *this;
  }
  b_ = big_or_null(value() * o.value(), s_);
  return *this;
}

Coef Coef::operator-() const {
  if (!b_ && s_ != INT64_MIN) return Coef(-s_);
  return Coef(Rational(-value()));
}

// ---------------------------------------------------------------- GroupRingElement

namespace {

bool key_less(const GroupRingElement::Terms::value_type& a, const GroupRingElement::Terms::value_type& b) {
  return a.first < b.first;
}

auto find_key(GroupRingElement::Terms& t, const Coords& c) {
  return std::lower_bound(t.begin(), t.end(), c, [](const auto& e, const Coords& k) { return e.first < k; });
}

// sort by key, merge equal keys, drop zeros
void settle(GroupRingElement::Terms& t) {
  if (t.size() > 1) std::sort(t.begin(), t.end(), key_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (out > 0 && t[out - 1].first == t[i].first) {
      t[out - 1].second += t[i].second;
      continue;
    }
    if (out > 0 && t[out - 1].second.is_zero()) --out;
    if (out != i) t[out] = std::move(t[i]);
    ++out;
  }
  if (out > 0 && t[out - 1].second.is_zero()) --out;
  t.resize(out);
}

// a += b, both sorted without zeros
void merge_into(GroupRingElement::Terms& a, GroupRingElement::Terms&& b) {
  if (b.empty()) return;
  if (a.empty()) {
    a = std::move(b);
    return;
  }
  GroupRingElement::Terms r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(std::move(b[j++]));
    } else {
      a[i].second += b[j].second;
      if (!a[i].second.is_zero()) r.push_back(std::move(a[i]));
      ++i, ++j;
    }
  }
  a = std::move(r);
}

}  // namespace

GroupRingElement GroupRingElement::constant(GroupPtr g, const Rational& c) {
  GroupRingElement r(g);
  if (c != 0) r.t_.emplace_back(g->zero(), Coef(c));
  return r;
}

GroupRingElement GroupRingElement::monomial(GroupPtr g, Coords c, const Rational& coef) {
  GroupRingElement r(g);
  if (coef != 0) r.t_.emplace_back(g->reduce(std::move(c)), Coef(coef));
  return r;
}

GroupRingElement GroupRingElement::monomial(const GroupElement& e, const Rational& coef) {
  return monomial(e.group(), e.coords(), coef);
}

bool GroupRingElement::is_one() const {
  return t_.size() == 1 && g_->is_zero(t_.front().first) && t_.front().second == Coef(1);
}

bool GroupRingElement::is_unit() const {
  return t_.size() == 1 && (t_.front().second == Coef(1) || t_.front().second == Coef(-1));
}

GroupRingElement GroupRingElement::unit_inverse() const {
  if (!is_unit()) throw PreconditionError("element is not a unit monomial");
  GroupRingElement r(g_);
  r.t_.emplace_back(g_->neg(t_.front().first), t_.front().second);
  return r;
}

bool GroupRingElement::is_integral() const {
  for (auto& [k, c] : t_)
    if (!c.is_integer()) return false;
  return true;
}

Rational GroupRingElement::coefficient(const Coords& c) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), c, [](const auto& e, const Coords& k) { return e.first < k; });
  return it == t_.end() || it->first != c ? Rational(0) : it->second.value();
}

Rational GroupRingElement::augmentation() const {
  Coef s;
  for (auto& [k, c] : t_) s += c;
  return s.value();
}

void GroupRingElement::add_term(const Coords& c, const Coef& coef) {
  if (coef.is_zero()) return;
  auto it = find_key(t_, c);
  if (it == t_.end() || it->first != c) {
    t_.emplace(it, c, coef);
    return;
  }
  it->second += coef;
  if (it->second.is_zero()) t_.erase(it);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  if (!g_) g_ = o.g_;
  require_same_group(g_, o.g_, "group ring sum");
  if (o.t_.size() <= 2) {
    for (auto& [k, c] : o.t_) add_term(k, c);
  } else {
    merge_into(t_, Terms(o.t_));
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  if (!g_) g_ = o.g_;
  require_same_group(g_, o.g_, "group ring difference");
  if (o.t_.size() <= 2) {
    for (auto& [k, c] : o.t_) add_term(k, -c);
  } else {
    Terms n(o.t_);
    for (auto& [k, c] : n) c = -c;
    merge_into(t_, std::move(n));
  }
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r(*this);
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

void GroupRingElement::add_product(const GroupRingElement& a, const GroupRingElement& b, const Rational& scale) {
  require_same_group(a.g_, b.g_, "group ring product");
  if (!g_) g_ = a.g_;
  require_same_group(g_, a.g_, "group ring product");
  if (scale == 0 || a.t_.empty() || b.t_.empty()) return;
  const Coef sc(scale);
  const bool unit_scale = sc == Coef(1);
  if (a.t_.size() == 1 && b.t_.size() == 1) {
    Coef c = a.t_[0].second * b.t_[0].second;
    if (!unit_scale) c *= sc;
    add_term(g_->add(a.t_[0].first, b.t_[0].first), c);
    return;
  }
  Terms buf;
  buf.reserve(a.t_.size() * b.t_.size());
  for (auto& [ka, ca] : a.t_)
    for (auto& [kb, cb] : b.t_) {
      Coef c = ca * cb;
      if (!unit_scale) c *= sc;
      buf.emplace_back(g_->add(ka, kb), std::move(c));
    }
  settle(buf);
  merge_into(t_, std::move(buf));
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  // translation by a monomial cannot merge terms
  if (o.t_.size() == 1 && g_ && same_group(g_, o.g_)) {
    auto& [k, c] = o.t_.front();
    GroupRingElement r = shifted(k);
    if (c != Coef(1))
      for (auto& [kk, v] : r.t_) v *= c;
    return r;
  }
  GroupRingElement r(g_);
  r.add_product(*this, o);
  return r;
}

GroupRingElement GroupRingElement::operator*(const Rational& c) const {
  if (c == 0) return GroupRingElement(g_);
  const Coef k(c);
  GroupRingElement r(*this);
  for (auto& [g, v] : r.t_) v *= k;
  return r;
}

GroupRingElement GroupRingElement::pushforward(const GroupHom& h) const {
  require_same_group(h.source(), g_, "pushforward");
  GroupRingElement r(h.target());
  r.t_.reserve(t_.size());
  for (auto& [k, c] : t_) r.t_.emplace_back(h.apply(k), c);
  settle(r.t_);
  return r;
}

GroupRingElement GroupRingElement::shifted(const Coords& g) const {
  GroupRingElement r(g_);
  r.t_.reserve(t_.size());
  for (auto& [k, c] : t_) r.t_.emplace_back(g_->add(k, g), c);
  // torsion coordinates wrap, so the order can change
  if (r.t_.size() > 1) std::sort(r.t_.begin(), r.t_.end(), key_less);
  return r;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(GroupPtr g, std::vector<GroupRingElement> coeffs, bool weight_graded)
    : g_(std::move(g)), c_(std::move(coeffs)), weighted_(weight_graded) {
  for (auto& c : c_) {
    if (!c.group()) c = GroupRingElement(g_);
    require_same_group(g_, c.group(), "polynomial coefficient");
  }
  trim();
}

Poly Poly::one(GroupPtr g, bool weight_graded) {
  Poly p(g, weight_graded);
  p.c_.push_back(GroupRingElement::one(g));
  return p;
}

Poly Poly::monomial(const GroupRingElement& c, int degree, bool weight_graded) {
  if (degree < 0) throw PreconditionError("negative degree");
  Poly p(c.group(), weight_graded);
  p.c_.assign(static_cast<std::size_t>(degree) + 1, GroupRingElement(c.group()));
  p.c_[static_cast<std::size_t>(degree)] = c;
  p.trim();
  return p;
}

Poly Poly::one_minus(const GroupRingElement& c, int degree, bool weight_graded) {
  return one(c.group(), weight_graded) - monomial(c, degree, weight_graded);
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return -1;
}

GroupRingElement Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return GroupRingElement(g_);
  return c_[static_cast<std::size_t>(k)];
}

Poly Poly::operator+(const Poly& o) const {
  require_same_group(g_, o.g_, "polynomial sum");
  Poly r(*this);
  if (r.c_.size() < o.c_.size()) r.c_.resize(o.c_.size(), GroupRingElement(g_));
  for (std::size_t k = 0; k < o.c_.size(); ++k) r.c_[k] += o.c_[k];
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  require_same_group(g_, o.g_, "polynomial product");
  if (weighted_ != o.weighted_) throw PreconditionError("polynomial product: mixed gradings");
  Poly r(g_, weighted_);
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, GroupRingElement(g_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) r.c_[i + j].add_product(c_[i], o.c_[j]);
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const GroupRingElement& c) const {
  Poly r(g_, weighted_);
  for (auto& x : c_) r.c_.push_back(x * c);
  r.trim();
  return r;
}

bool Poly::operator==(const Poly& o) const { return same_group(g_, o.g_) && c_ == o.c_; }

Poly Poly::stretched(int k) const {
  if (k < 1) throw PreconditionError("stretch factor must be positive");
  Poly r(g_, weighted_);
  if (c_.empty()) return r;
  r.c_.assign((c_.size() - 1) * static_cast<std::size_t>(k) + 1, GroupRingElement(g_));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<std::size_t>(k)] = c_[i];
  return r;
}

Poly Poly::negated_variable() const {
  Poly r(*this);
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

Poly Poly::shifted_down(int v) const {
  if (v == 0) return *this;
  if (valuation() >= 0 && valuation() < v) throw PreconditionError("cannot divide polynomial by t^" + std::to_string(v));
  Poly r(g_, weighted_);
  if (static_cast<int>(c_.size()) > v) r.c_.assign(c_.begin() + v, c_.end());
  return r;
}

Poly Poly::pushforward(const GroupHom& h) const {
  Poly r(h.target(), weighted_);
  for (auto& c : c_) r.c_.push_back(c.pushforward(h));
  r.trim();
  return r;
}

bool Poly::is_integral() const {
  for (auto& c : c_)
    if (!c.is_integral()) return false;
  return true;
}

// ---------------------------------------------------------------- GradedSeries

GradedSeries::GradedSeries(GroupPtr g, int N, bool weight_graded)
    : g_(std::move(g)), N_(N), weighted_(weight_graded) {
  if (N < 0) throw PreconditionError("negative truncation");
  c_.assign(static_cast<std::size_t>(N) + 1, GroupRingElement(g_));
}

GradedSeries GradedSeries::one(GroupPtr g, int N, bool weight_graded) {
  GradedSeries s(g, N, weight_graded);
  s.c_[0] = GroupRingElement::one(g);
  return s;
}

GradedSeries GradedSeries::from_poly(const Poly& p, int N) {
  GradedSeries s(p.group(), N, p.weight_graded());
  for (int k = 0; k <= std::min(N, p.degree()); ++k) s.c_[static_cast<std::size_t>(k)] = p.coeffs()[static_cast<std::size_t>(k)];
  return s;
}

void GradedSeries::check_compatible(const GradedSeries& o, const char* what) const {
  require_same_group(g_, o.g_, what);
  if (weighted_ != o.weighted_) throw PreconditionError(std::string(what) + ": mixed gradings");
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
  check_compatible(o, "series sum");
  GradedSeries r(g_, std::min(N_, o.N_), weighted_);
  for (int k = 0; k <= r.N_; ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const { return *this + (-o); }

GradedSeries GradedSeries::operator*(const GradedSeries& o) const {
  check_compatible(o, "series product");
  GradedSeries r(g_, std::min(N_, o.N_), weighted_);
  for (int i = 0; i <= r.N_; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= r.N_; ++j)
      if (!o.c_[j].is_zero()) r.c_[i + j].add_product(c_[i], o.c_[j]);
  }
  return r;
}

GradedSeries GradedSeries::operator*(const Rational& c) const {
  GradedSeries r(*this);
  for (auto& x : r.c_) x = x * c;
  return r;
}

bool GradedSeries::operator==(const GradedSeries& o) const {
  return same_group(g_, o.g_) && N_ == o.N_ && weighted_ == o.weighted_ && c_ == o.c_;
}

GradedSeries GradedSeries::inverse() const {
  if (!c_[0].is_unit()) throw PreconditionError("series inverse: constant term is not a unit");
  GroupRingElement a0inv = c_[0].unit_inverse();
  GradedSeries b(g_, N_, weighted_);
  b.c_[0] = a0inv;
  for (int k = 1; k <= N_; ++k) {
    GroupRingElement acc(g_);
    for (int j = 1; j <= k; ++j)
      if (!c_[j].is_zero() && !b.c_[k - j].is_zero()) acc.add_product(c_[j], b.c_[k - j]);
    b.c_[k] = -(a0inv * acc);
  }
  return b;
}

GradedSeries GradedSeries::exp() const {
  if (!c_[0].is_zero()) throw PreconditionError("series exp: constant term must be zero");
  GradedSeries e(g_, N_, weighted_);
  e.c_[0] = GroupRingElement::one(g_);
  for (int k = 1; k <= N_; ++k) {
    GroupRingElement acc(g_);
    for (int j = 1; j <= k; ++j)
      if (!c_[j].is_zero() && !e.c_[k - j].is_zero()) acc.add_product(c_[j], e.c_[k - j], frac(j, k));
    e.c_[k] = std::move(acc);
  }
  return e;
}

GradedSeries GradedSeries::log() const {
  if (!c_[0].is_one()) throw PreconditionError("series log: constant term must be 1");
  GradedSeries l(g_, N_, weighted_);
  for (int k = 1; k <= N_; ++k) {
    GroupRingElement acc = c_[k];
    for (int j = 1; j < k; ++j)
      if (!l.c_[j].is_zero() && !c_[k - j].is_zero()) acc.add_product(l.c_[j], c_[k - j], frac(-j, k));
    l.c_[k] = std::move(acc);
  }
  return l;
}

GradedSeries GradedSeries::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  GradedSeries result = one(g_, N_, weighted_), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

GradedSeries GradedSeries::truncated(int N) const {
  if (N > N_) throw PreconditionError("cannot extend a truncated series");
  GradedSeries r(g_, N, weighted_);
  for (int k = 0; k <= N; ++k) r.c_[k] = c_[k];
  return r;
}

GradedSeries GradedSeries::pushforward(const GroupHom& h) const {
  GradedSeries r(h.target(), N_, weighted_);
  for (int k = 0; k <= N_; ++k) r.c_[k] = c_[k].pushforward(h);
  return r;
}

bool GradedSeries::is_integral() const {
  for (auto& c : c_)
    if (!c.is_integral()) return false;
  return true;
}

// ---------------------------------------------------------------- RationalForm

RationalForm::RationalForm(Poly num) : num_(std::move(num)), den_(Poly::one(num_.group(), num_.weight_graded())) {}

RationalForm::RationalForm(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_group(num_.group(), den_.group(), "rational form");
  if (num_.weight_graded() != den_.weight_graded()) throw PreconditionError("rational form: mixed gradings");
  int v = den_.valuation();
  if (v < 0) throw PreconditionError("rational form: zero denominator");
  if (!den_.coeffs()[static_cast<std::size_t>(v)].is_unit())
    throw PreconditionError("rational form: lowest denominator coefficient is not a unit");
  if (v > 0) {
    int vn = num_.valuation();
    if (vn >= 0 && vn < v) throw PreconditionError("rational form: genuine Laurent tail (pole at t = 0)");
    num_ = num_.shifted_down(v);
    den_ = den_.shifted_down(v);
  }
}

GradedSeries RationalForm::expand(int N) const {
  return GradedSeries::from_poly(num_, N) * GradedSeries::from_poly(den_, N).inverse();
}

RationalForm RationalForm::operator*(const RationalForm& o) const { return RationalForm(num_ * o.num_, den_ * o.den_); }

RationalForm RationalForm::inverse() const { return RationalForm(den_, num_); }

RationalForm RationalForm::operator/(const RationalForm& o) const { return *this * o.inverse(); }

RationalForm RationalForm::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Poly n = Poly::one(group(), weight_graded()), d = n;
  for (int i = 0; i < k; ++i) n = n * num_, d = d * den_;
  return RationalForm(n, d);
}

RationalForm RationalForm::pushforward(const GroupHom& h) const {
  return RationalForm(num_.pushforward(h), den_.pushforward(h));
}

bool RationalForm::equals(const RationalForm& o) const { return num_ * o.den_ == o.num_ * den_; }

// ---------------------------------------------------------------- specialize

namespace {

std::int64_t weight_of(const GroupHom& mu, const Coords& c) { return mu.apply(c)[0]; }

void check_weight_hom(const GroupHom& h, const std::optional<GroupHom>& mu) {
  if (!mu) throw PreconditionError("specialize: t = 1 needs a weight hom");
  require_same_group(mu->source(), h.target(), "specialize weight hom");
  if (mu->target()->ncoords() != 1 || mu->target()->rank() != 1)
    throw PreconditionError("specialize: weight hom must land in Z");
}

}  // namespace

GradedSeries specialize(const GradedSeries& s, const GroupHom& h, TValue tv, const std::optional<GroupHom>& mu) {
  GradedSeries pushed = s.pushforward(h);
  if (tv == TValue::Keep) return pushed;
  if (s.weight_graded()) throw PreconditionError("specialize: t already set to one");
  check_weight_hom(h, mu);
  GradedSeries r(h.target(), s.truncation(), true);
  for (int k = 0; k <= s.truncation(); ++k)
    for (auto& [g, c] : pushed[k].terms()) {
      if (weight_of(*mu, g) != k)
        throw PreconditionError("specialize: monomial weight " + std::to_string(weight_of(*mu, g)) +
                                " does not carry its t-degree " + std::to_string(k) + "; t = 1 would collapse coefficients");
      r[k].add_term(g, c);
    }
  return r;
}

Poly specialize(const Poly& p, const GroupHom& h, TValue tv, const std::optional<GroupHom>& mu) {
  Poly pushed = p.pushforward(h);
  if (tv == TValue::Keep) return pushed;
  if (p.weight_graded()) throw PreconditionError("specialize: t already set to one");
  check_weight_hom(h, mu);
  std::vector<GroupRingElement> c(pushed.coeffs().size(), GroupRingElement(h.target()));
  for (int k = 0; k <= pushed.degree(); ++k)
    for (auto& [g, v] : pushed.coeffs()[static_cast<std::size_t>(k)].terms()) {
      if (weight_of(*mu, g) != k)
        throw PreconditionError("specialize: monomial weight does not carry its t-degree; t = 1 would collapse coefficients");
      c[static_cast<std::size_t>(k)].add_term(g, v);
    }
  return Poly(h.target(), std::move(c), true);
}

RationalForm specialize(const RationalForm& r, const GroupHom& h, TValue tv, const std::optional<GroupHom>& mu) {
  return RationalForm(specialize(r.num(), h, tv, mu), specialize(r.den(), h, tv, mu));
}

Rational coefficient_of(const GradedSeries& s, const Coords& g, int k) {
  if (k < 0 || k > s.truncation())
    throw PreconditionError("coefficient_of: degree " + std::to_string(k) + " beyond truncation " + std::to_string(s.truncation()));
  return s[k].coefficient(s.group()->reduce(g));
}

void assert_integral(const GradedSeries& s, const std::string& what) {
  if (!s.is_integral()) throw IntegralityError(what + " has a non-integral coefficient");
}

void assert_integral(const Poly& p, const std::string& what) {
  if (!p.is_integral()) throw IntegralityError(what + " has a non-integral coefficient");
}

// ---------------------------------------------------------------- rendering

std::string render(const Rational& q) { return q.get_str(); }

namespace {

std::string power(const std::string& var, std::int64_t e) {
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

std::string group_part(const Coords& g, const FGAbelianGroup& G, const RenderOptions& opt) {
  if (G.is_zero(g)) return {};
  if (opt.single_variable && G.rank() == 1 && G.ncoords() == 1) return power(opt.var, g[0]);
  std::ostringstream os;
  os << "t_(";
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
  os << ')';
  return os.str();
}

void append_term(std::string& out, bool& first, const Rational& c, const std::string& body) {
  Rational a = abs(c);
  std::string t;
  if (body.empty())
    t = render(a);
  else if (a == 1)
    t = body;
  else
    t = render(a) + " * " + body;
  if (first)
    out += (c < 0 ? "-" : "") + t;
  else
    out += (c < 0 ? " - " : " + ") + t;
  first = false;
}

void append_coeff(std::string& out, bool& first, const GroupRingElement& x, int degree, bool weighted,
                  const RenderOptions& opt) {
  std::string tpart = (weighted || degree == 0) ? std::string() : power("t", degree);
  for (auto& [g, c] : x.terms()) {
    std::string gp = group_part(g, *x.group(), opt);
    std::string body = gp;
    if (!tpart.empty()) body = body.empty() ? tpart : body + " * " + tpart;
    append_term(out, first, c, body);
  }
}

}  // namespace

std::string render(const GroupRingElement& x, const RenderOptions& opt) {
  std::string out;
  bool first = true;
  append_coeff(out, first, x, 0, true, opt);
  return first ? "0" : out;
}

std::string render(const Poly& p, const RenderOptions& opt) {
  std::string out;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) append_coeff(out, first, p.coeffs()[static_cast<std::size_t>(k)], k, p.weight_graded(), opt);
  return first ? "0" : out;
}

std::string render(const GradedSeries& s, const RenderOptions& opt) {
  std::string out;
  bool first = true;
  for (int k = 0; k <= s.truncation(); ++k) append_coeff(out, first, s[k], k, s.weight_graded(), opt);
  if (!opt.show_truncation) return first ? "0" : out;
  std::string tail = std::string("O(") + (opt.single_variable ? opt.var : s.weight_graded() ? "w" : "t") + "^" + std::to_string(s.truncation() + 1) + ")";
  return first ? tail : out + " + " + tail;
}

std::string render(const RationalForm& r, const RenderOptions& opt) {
  if (r.den().degree() == 0 && r.den().coeffs()[0].is_one()) return render(r.num(), opt);
  return "(" + render(r.num(), opt) + ") / (" + render(r.den(), opt) + ")";
}

}  // namespace bz
