#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace doxa {

struct SuiteOptions {
  std::uint64_t seed = 42;
  // Overrides each suite's pinned sample count when positive; 0 keeps the
  // per-suite defaults (the counts the acceptance gate is specified with).
  int samples = 0;
};

struct SuiteResult {
  std::string id;  // "c01".."c15", "fixtures"
  std::string title;
  bool passed = false;
  std::string detail;  // counts, or the first failing check
  double seconds = 0.0;
};

// Runs every suite whose id or title contains `filter` (empty runs all),
// in id order.  Never throws for a failing check; a crash-level problem in
// one suite is reported as that suite's failure.
std::vector<SuiteResult> run_suites(const std::string& filter, const SuiteOptions& options);

}  // namespace doxa
