#pragma once

// The verification battery behind `chroma verify` and the acceptance test
// binary: theorem-value reproduction at desk scale plus the property suites.
// Every threshold is pinned here; criteria report pass/fail, never loosen.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace chroma::accept {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0;
};

constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_all(std::uint64_t seed, std::ostream* progress = nullptr);

}  // namespace chroma::accept
