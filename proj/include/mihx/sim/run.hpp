#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mihx/protocol/transcript.hpp"
#include "mihx/sim/scenario.hpp"

namespace mihx::sim {

struct MetricsRecord {
  std::string scheme;
  std::string mode;
  std::uint64_t seed = 0;
  std::string outcome;
  std::optional<double> sweep_value;
  /// Connectivity loss to first packet from the target; empty when the
  /// handover did not complete.
  std::optional<double> handover_delay_ms;
  std::uint64_t packets_generated = 0;
  std::uint64_t packets_lost = 0;
  std::uint64_t packets_duplicated_suppressed = 0;
  std::int64_t signaling_wireless = 0;  ///< octet-hops
  std::int64_t signaling_wired = 0;     ///< octet-hops
  std::uint64_t transcript_length = 0;

  friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

struct RunOutput {
  MetricsRecord metrics;
  protocol::Transcript transcript;
};

/// Validates the scenario (ConfigInvalid) and runs one handover.
RunOutput run_scenario(const Scenario& scenario);

}  // namespace mihx::sim
