#pragma once

#include <string>
#include <vector>

#include "deltaring/ring.hpp"

namespace deltaring {

struct VerifyOptions {
  bool fast = false;  // skip the l=4 lattice and l=6 antichain runs
  uint64_t cap = kDefaultElementCap;
  uint64_t seed = 0xD;
};

struct CheckResult {
  std::string id;
  std::string location;  // theorem / remark the check certifies
  bool pass = false;
  std::string detail;
  double ms = 0;
};

// Runs every classification check at desk scale.  Checks are independent;
// a throwing check is reported as failed, never aborting the suite.
std::vector<CheckResult> run_paper_checks(const VerifyOptions& opt);

}  // namespace deltaring
