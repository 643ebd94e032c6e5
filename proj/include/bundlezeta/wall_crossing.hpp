#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bundlezeta/gt.hpp"

namespace bz {

struct WallCrossingCase {
  std::string label;
  bool ok = false;
  std::string detail;  // empty when ok
};

// C and C' of types (eps, I) and (-eps, I) share every series; their P_pi cancel.
WallCrossingCase birth_death_check(const TorusType& t, const CurveSeries& shared, int N);

// C_- of type (eps, I_minus) meets C_+ along the cover `bar`; C-bar is that
// double cover, whose own double cover is the 4-fold one. Checks
// P_pi(C_+) P_pi(C-bar) = P_pi(C_-) exactly and expanded to N.
WallCrossingCase bifurcation_check(int sign, const std::set<int>& I_minus, int bar, const CurveSeries& shared, int N);

// Types derived from the sign rules, exposed for tests.
TorusType bifurcation_plus_type(int sign, const std::set<int>& I_minus, int bar);
TorusType bifurcation_bar_type(int sign, const std::set<int>& I_minus, int bar);

struct WallCrossingReport {
  std::vector<WallCrossingCase> cases;
  bool ok() const;
};

// All 16 birth/death and 48 bifurcation cases on random shared series.
WallCrossingReport wall_crossing_suite(std::uint64_t seed, int N);

}  // namespace bz
