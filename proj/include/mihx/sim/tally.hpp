#pragma once

#include <cstdint>

#include "mihx/analytic/cost.hpp"
#include "mihx/analytic/rational.hpp"
#include "mihx/protocol/transcript.hpp"
#include "mihx/sim/link.hpp"

namespace mihx::sim {

struct SignalingTally {
  /// Octet sums per path group; data packets and local events excluded.
  analytic::SignalingTerms groups;
  std::int64_t wireless_octet_hops = 0;
  std::int64_t wired_octet_hops = 0;
  analytic::Rational wireless_cost{0};  ///< B x wireless octet-hops
  analytic::Rational wired_cost{0};     ///< A x wired octet-hops
};

SignalingTally signaling_tally(const protocol::Transcript& transcript, const Topology& topology,
                               analytic::Rational wired_unit = 1,
                               analytic::Rational wireless_unit = 1);

}  // namespace mihx::sim
