#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ymheat {

struct CheckResult {
  std::string suite;
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

std::vector<CheckResult> verify_partitions();
/// Exact identities for weights, branching and the Schur oracle.
std::vector<CheckResult> verify_identities();
/// Casimir and dimension inequalities.
std::vector<CheckResult> verify_inequalities();
/// Character-sum invariants: plane, flat closed forms, normalisation, oracle.
std::vector<CheckResult> verify_sums();
std::vector<CheckResult> verify_all();

}  // namespace ymheat
