#ifndef ISORES_VERIFY_HPP
#define ISORES_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "isores/counting.hpp"

namespace isores {

struct VerifyOptions {
  int max_sum_b_xi = 14;        // cross-oracle scan
  int max_sum_b_recursion = 12; // recursion identity scan
  int max_sum_b = 12;           // profile-based scans
  int max_genus_a = 8;          // simple-pole genus formula scan
  int jobs = 1;
  bool with_graphs = true;
  bool with_determinism = true;
  bool with_fixed = true;  // pinned profiles, symbolic example, one-chamber families
  // Test-harness fault injection: replaces xi_closed inside the checks.
  std::function<BigInt(const XiQuery&)> xi_closed_fn;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  long long cases = 0;
  std::string detail;  // first counterexample on failure
};

// Runs every cross-check of the acceptance suite at the configured scale.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

// CSV over all two-zero strata with sum(b) <= max_sum_b, one row per stratum,
// sorted lexicographically by mu; byte-identical for any worker count.
std::string scan_csv(int max_sum_b, int jobs);

} // namespace isores

#endif
