#pragma once

#include <string>
#include <vector>

namespace diracwig {

enum class ValidationLevel { quick, full };

ValidationLevel parse_validation_level(const std::string& name);

/// Deliberate corruption used to prove that a suite can fail.
struct FaultInjection {
  bool flip_a34 = false;  // negate a34 (not a43) in the coefficient route
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst defect seen
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

/// Quick: basis orthonormality, spinor orthonormality, pure-state constraint and
/// the M - M_cl = C2 identity. Full adds oracle equivalence, grid normalization
/// and purity for every family, and the cat averaging identities.
ValidationReport run_validate(ValidationLevel level, const FaultInjection& fault = {}, int threads = 0);

std::string format_check(const CheckResult& c);

}  // namespace diracwig
