#include "bundlezeta/wall_crossing.hpp"

#include "bundlezeta/random_data.hpp"

namespace bz {

namespace {

std::vector<std::set<int>> all_subsets() {
  std::vector<std::set<int>> out;
  for (int mask = 0; mask < 8; ++mask) {
    std::set<int> s;
    for (int i = 1; i <= 3; ++i)
      if (mask & (1 << (i - 1))) s.insert(i);
    out.push_back(s);
  }
  return out;
}

CurveRecord torus(const std::string& label, const TorusType& t, CurveSeries s) {
  CurveRecord c;
  c.label = label;
  c.sign = t.sign;
  c.torus_type = t;
  c.series = std::move(s);
  return c;
}

// sign of the cover i of a curve of type t
int cover_sign(const TorusType& t, int i) { return t.I.count(i) ? -1 : 1; }

WallCrossingCase compare(std::string label, const RationalForm& lhs, const RationalForm& rhs, int N) {
  WallCrossingCase c{std::move(label), true, {}};
  if (!lhs.equals(rhs)) {
    c.ok = false;
    c.detail = "rational identity fails: " + render(lhs) + " vs " + render(rhs);
  } else if (lhs.expand(N) != rhs.expand(N)) {
    c.ok = false;
    c.detail = "expansions differ below t^" + std::to_string(N);
  }
  return c;
}

}  // namespace

WallCrossingCase birth_death_check(const TorusType& t, const CurveSeries& shared, int N) {
  TorusType u{-t.sign, t.I};
  RationalForm prod = p_pi(torus("C", t, shared)) * p_pi(torus("C'", u, shared));
  return compare("birth-death " + to_string(t), prod, RationalForm::one(shared.curve.group(), shared.curve.weight_graded()), N);
}

TorusType bifurcation_plus_type(int sign, const std::set<int>& I_minus, int bar) {
  if (bar < 1 || bar > 3) throw PreconditionError("the bifurcating cover must be one of 1..3");
  TorusType t{sign, I_minus};
  if (t.I.count(bar)) t.I.erase(bar); else t.I.insert(bar);
  return t;
}

TorusType bifurcation_bar_type(int sign, const std::set<int>& I_minus, int bar) {
  TorusType plus = bifurcation_plus_type(sign, I_minus, bar);
  TorusType t{-plus.sign * cover_sign(plus, bar), {}};
  int hat_sign = 1;
  for (int i = 1; i <= 3; ++i)
    if (i != bar) hat_sign *= cover_sign(plus, i);
  if (hat_sign < 0) t.I.insert(iota_pullback(bar, bar == 1 ? 2 : 1));
  return t;
}

WallCrossingCase bifurcation_check(int sign, const std::set<int>& I_minus, int bar, const CurveSeries& shared, int N) {
  TorusType minus{sign, I_minus};
  TorusType plus = bifurcation_plus_type(sign, I_minus, bar);
  TorusType bart = bifurcation_bar_type(sign, I_minus, bar);
  // the two pull-backs agree whichever other cover is used to name the hat cover
  const int j1 = bar == 1 ? 2 : 1, j2 = bar == 3 ? 2 : 3;
  if (iota_pullback(bar, j1) != iota_pullback(bar, j2) || iota_compose(bar, j1).which != 4)
    throw Error("internal: the double cover of C-bar is not well defined");
  const int hat = iota_pullback(bar, j1);
  auto find = [&](int i) -> const RationalForm& {
    auto it = shared.covers.find(i);
    if (it == shared.covers.end()) throw PreconditionError("shared series lacks cover " + std::to_string(i));
    return it->second;
  };
  // C-bar is isotopic to the cover bar of C_+, its cover hat to the 4-fold cover
  CurveSeries sbar{find(bar), {{hat, find(4)}}};
  RationalForm lhs = p_pi(torus("C+", plus, shared)) * p_pi(torus("Cbar", bart, sbar));
  RationalForm rhs = p_pi(torus("C-", minus, shared));
  return compare("bifurcation " + to_string(minus) + " along " + std::to_string(bar), lhs, rhs, N);
}

bool WallCrossingReport::ok() const {
  for (auto& c : cases)
    if (!c.ok) return false;
  return true;
}

WallCrossingReport wall_crossing_suite(std::uint64_t seed, int N) {
  rnd::Rng r(seed);
  GroupPtr g = make_group(1, {2});
  auto draw = [&] {
    CurveSeries s{rnd::random_series(r, g, N), {}};
    for (int i = 1; i <= 4; ++i) s.covers.emplace(i, rnd::random_series(r, g, N));
    return s;
  };
  WallCrossingReport rep;
  for (int sign : {1, -1})
    for (auto& I : all_subsets()) rep.cases.push_back(birth_death_check({sign, I}, draw(), N));
  for (int sign : {1, -1})
    for (auto& I : all_subsets())
      for (int bar = 1; bar <= 3; ++bar) {
        rep.cases.push_back(bifurcation_check(sign, I, bar, draw(), N));
      }
  return rep;
}

}  // namespace bz
