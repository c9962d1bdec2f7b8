#include "doctest.h"

#include <nlohmann/json.hpp>

#include "wreathlab/verify.hpp"

using namespace wreathlab;

TEST_CASE("small-scale verification passes and follows the report schema") {
  VerifyReport report = run_verification(VerifyScale::Small);
  CHECK(report.all_passed());

  bool note_present = false;
  for (const ClaimResult& claim : report.claims) {
    if (claim.status == "info" && claim.detail == diagonal_center_note()) note_present = true;
  }
  CHECK(note_present);

  nlohmann::json encoded = report_to_json(report);
  REQUIRE(encoded.is_array());
  CHECK(encoded.size() == report.claims.size());
  for (const auto& entry : encoded) {
    CHECK(entry.is_object());
    CHECK(entry.size() == 4);
    CHECK(entry.contains("claim"));
    CHECK(entry.contains("paper_ref"));
    CHECK(entry.contains("status"));
    CHECK(entry.contains("detail"));
    CHECK(entry["status"].is_string());
  }
}
