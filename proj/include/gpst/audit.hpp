#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpst/catalog.hpp"
#include "gpst/localization.hpp"

namespace gpst {

struct AuditTolerances {
  double assert_tol = 1e-10;  // property assertions
  double tight_tol = 1e-12;   // construction/factorization identities
};

// One row per (pair, automorphism, theorem).  residual is the primary
// deviation; margin carries the bound margin (signed) or a secondary
// deviation, depending on the theorem -- detail says which.
struct AuditRow {
  std::string pair;
  std::string automorphism;
  std::string theorem;
  std::string status;  // asserted-pass | asserted-fail | reported
  double residual = 0.0;
  double margin = 0.0;
  std::string detail;
};

struct AuditReport {
  uint64_t seed = 0;
  AuditTolerances tolerances;
  std::string version;
  std::vector<AuditRow> rows;

  int asserted_fail_count() const;
  bool any_asserted_fail() const { return asserted_fail_count() > 0; }
};

// Runs the full theorem suite on the selected catalog pairs.  Deterministic
// for a fixed seed; rows are ordered by (pair, automorphism, theorem).
AuditReport run_verify(const std::vector<std::string>& selection, uint64_t seed,
                       AuditTolerances tol = {});

std::string report_json(const AuditReport& report);
std::string report_table(const AuditReport& report);

}  // namespace gpst
