#pragma once

#include <string>
#include <vector>

namespace gaussiso {

struct ClaimResult {
  std::string claim_id;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  long long runtime_ms = 0;
  std::string note;
};

struct VerificationReport {
  std::vector<ClaimResult> results;
  bool all_passed = true;
  unsigned long long seed = 0;
};

std::vector<ClaimResult> suite_quadrilateral(unsigned long long seed, int count);
std::vector<ClaimResult> suite_rhombus_limit();
std::vector<ClaimResult> suite_lemma32(int grid);
std::vector<ClaimResult> suite_u_bound(int grid);
std::vector<ClaimResult> suite_I_sup();
std::vector<ClaimResult> suite_triangle();
std::vector<ClaimResult> suite_ngon(double rmax);
std::vector<ClaimResult> suite_cclass(unsigned long long seed, int count);
std::vector<ClaimResult> suite_stationarity();

VerificationReport verify_all(unsigned long long seed);

/// {claims: [...], all_passed: bool, seed: int}; runtimes are deliberately
/// excluded so that equal-seed runs serialize identically.
std::string report_to_json(const VerificationReport& report);

std::string report_to_table(const VerificationReport& report);

}  // namespace gaussiso
