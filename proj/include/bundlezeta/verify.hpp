#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bz {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool ok() const;
  std::size_t failures() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int N = 0;      // 0: suite default
  int count = 0;  // random instances / seeds; 0: suite default
};

// orbit-vs-det, lefschetz, theorem-identity, proposition-identity,
// direct-definition, disk-bundle, taubes, wall-crossing, product-mode, integrality
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

// The torus maps every suite draws from.
const std::vector<std::vector<std::vector<long>>>& corpus_matrices();

}  // namespace bz
