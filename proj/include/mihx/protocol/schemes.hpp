#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mihx/protocol/entity.hpp"
#include "mihx/protocol/network.hpp"
#include "mihx/protocol/transcript.hpp"

namespace mihx::protocol {

enum class Outcome { Completed, HandoverReject, UnknownPreviousMag, NoCandidate, CommitRejected };

std::string_view to_string(Outcome o);

struct HandoverOptions {
  double trigger_ms = 1000;
  double traffic_start_ms = 0;
  /// Availability reported by candidate i (1-based index i-1). Missing
  /// entries count as available.
  std::vector<bool> candidate_available;
  /// Code the new MAG returns in HAck(P) (predictive).
  std::uint8_t hack_code = 0;
  /// Status the target returns in the extended commit response (proposed).
  std::uint8_t commit_status = 0;
  /// Predictive: request forwarding ('F') or buffering at the previous MAG ('U').
  bool predictive_forward = true;
  /// Reactive: include 'F' in HI so the previous MAG tunnels its buffer.
  bool reactive_forward = true;
  /// Reactive: previous AP id carried in the attach message.
  std::string old_ap_id = "AP1";
};

struct RunResult {
  Outcome outcome = Outcome::Completed;
  EntityId target;
  Transcript transcript;
};

/// First available candidate in preference order. Throws
/// ProtocolError(NoCandidate) when none is available.
int choose_candidate(int m, const std::vector<bool>& available);

RunResult run_standard_mobile_init(Network& net, const HandoverOptions& opt = {});
RunResult run_standard_network_init(Network& net, const HandoverOptions& opt = {});
RunResult run_fpmip_predictive(Network& net, const HandoverOptions& opt = {});
RunResult run_fpmip_reactive(Network& net, const HandoverOptions& opt = {});
RunResult run_fast_handover_mih(Network& net, const HandoverOptions& opt = {});
RunResult run_proposed(Network& net, const HandoverOptions& opt = {});

RunResult run_scheme(Scheme s, Network& net, const HandoverOptions& opt = {});

}  // namespace mihx::protocol
