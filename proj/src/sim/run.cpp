#include "mihx/sim/run.hpp"

#include "mihx/protocol/network.hpp"
#include "mihx/protocol/schemes.hpp"
#include "mihx/sim/tally.hpp"

namespace mihx::sim {

RunOutput run_scenario(const Scenario& s) {
  s.validate();
  LinkTiming timing(s.mode, s.wireless, s.wired, s.p_f, s.seed);

  protocol::NetworkConfig cfg;
  cfg.topology = s.topology;
  cfg.t_l2_ms = s.t_l2_ms;
  cfg.data_size = s.data_size;
  cfg.cbr_interval_ms = s.cbr_interval_ms;
  cfg.buffer_capacity = s.buffer_capacity;
  cfg.n = s.n;
  cfg.m = s.m;
  cfg.catalog = s.catalog;
  cfg.profile = s.profile;

  protocol::Network net(std::move(cfg), timing);
  auto result = protocol::run_scheme(s.scheme, net, s.handover);
  const auto tally = signaling_tally(result.transcript, s.topology);

  MetricsRecord m;
  m.scheme = std::string(protocol::to_string(s.scheme));
  m.mode = std::string(to_string(s.mode));
  m.seed = s.seed;
  m.outcome = std::string(protocol::to_string(result.outcome));
  m.sweep_value = s.sweep_value;
  if (result.outcome == protocol::Outcome::Completed) m.handover_delay_ms = net.handover_delay_ms();
  m.packets_generated = net.data().generated;
  m.packets_lost = net.data().lost();
  m.packets_duplicated_suppressed = net.data().duplicates_suppressed;
  m.signaling_wireless = tally.wireless_octet_hops;
  m.signaling_wired = tally.wired_octet_hops;
  m.transcript_length = result.transcript.size();
  return RunOutput{std::move(m), std::move(result.transcript)};
}

}  // namespace mihx::sim
