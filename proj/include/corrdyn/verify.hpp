#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace corrdyn {

/// Options of the identity suite. Every instance draws from its own stream
/// keyed by (seed, identity, instance), so results do not depend on the
/// thread count or on which identities run.
struct VerifyOptions {
  std::uint64_t seed = 1;
  unsigned degree_cap = 3;  // >= 2
  unsigned instances = 20;
  std::optional<std::string> only;
};

struct IdentityResult {
  std::string name;
  unsigned passed = 0, failed = 0, skipped = 0;
  std::string first_failure;  // empty when nothing failed
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<IdentityResult> results;

  bool ok() const;
  /// Deterministic text: one PASS/FAIL line per identity with its repro
  /// command, then a summary line.
  std::string text() const;
};

/// Names of every identity, in report order.
std::vector<std::string> identity_names();

/// Throws std::invalid_argument when degree_cap < 2, instances == 0, or
/// `only` names no identity.
VerifyReport run_verify_suite(const VerifyOptions& opts);

}  // namespace corrdyn
