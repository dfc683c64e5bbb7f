#pragma once

#include <string>
#include <vector>

#include "mihx/cli/config.hpp"

namespace mihx::cli {

struct ValidationCheck {
  std::string scheme;
  std::string quantity;  ///< "delay" or "tally"
  bool pass = false;
  std::string simulated;
  std::string analytic;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  /// One line per check: `PASS|FAIL <scheme> <quantity> sim=... analytic=...`.
  std::string to_text() const;
};

/// Runs the four schemes with a closed form in deterministic mode.
/// Simulated handover delay must match within 0.1 ms and the per-group
/// signaling octet sums must match exactly. The simulator uses the config's
/// message catalog (with `size.*` overrides); the closed forms always use
/// the stock table, so a tampered size shows up as a tally mismatch.
ValidationReport run_validation(const RunConfig& cfg);

inline constexpr double kDelayTolerance = 0.1;

}  // namespace mihx::cli
