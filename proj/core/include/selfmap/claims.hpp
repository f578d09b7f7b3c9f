#pragma once

#include <string>
#include <vector>

namespace selfmap {

struct ClaimReport {
  std::string claim_id;
  std::string description;
  std::string expected;
  std::string observed;
  bool pass = false;
};

/// Runs the fixed claim suite C1..C8 (erf oracle agreement, reference values,
/// odd symmetry, the three origin derivatives, the interval counterexample,
/// the disk failures and the contrapositive Schwarz table).  All tolerances
/// are pinned in the implementation.
std::vector<ClaimReport> run_claim_suite();

std::string format_claim(const ClaimReport& report);

}  // namespace selfmap
