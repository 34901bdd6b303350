#pragma once

// Property suites over the whole library.  Each suite checks one law
// exactly on exhaustive or seeded-random instances; the acceptance test
// binary and the `verify` command both run these.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ordcopies::verify {

struct SuiteResult {
  std::string name;
  std::string summary;        // what was checked
  bool passed = false;
  std::size_t cases = 0;      // individual instances checked
  std::vector<std::string> failures;  // first few counterexamples
  double seconds = 0;
  double time_limit = 0;      // seconds; 0 = none
};

struct SuiteInfo {
  std::string_view name;
  std::string_view summary;
  double time_limit;
};

const std::vector<SuiteInfo>& suites();

inline constexpr std::uint64_t kDefaultSeed = 20240917;

// Throws DomainError for an unknown name.
SuiteResult run_suite(std::string_view name, std::uint64_t seed = kDefaultSeed);

}  // namespace ordcopies::verify
