#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace wreathlab {

enum class VerifyScale { Small, Full };

struct ClaimResult {
  std::string claim;
  std::string paper_ref;
  std::string status;  // "pass", "fail" or "info"
  std::string detail;
};

struct VerifyReport {
  std::vector<ClaimResult> claims;
  bool all_passed() const;
};

// Runs every structural claim the library is built around, one result per
// claim. Small scale caps closures at 1e5 elements and notes which
// instances were reduced; full scale runs everything at stated size.
VerifyReport run_verification(VerifyScale scale);

// The documented center discrepancy for the signed twist: the constant
// diagonal is not fixed by the signed shift, so only the rho^{2n} kernel
// survives in the computed center.
std::string diagonal_center_note();

nlohmann::json report_to_json(const VerifyReport& report);

}  // namespace wreathlab
