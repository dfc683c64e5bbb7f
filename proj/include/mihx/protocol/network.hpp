#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mihx/analytic/catalog.hpp"
#include "mihx/protocol/binding_cache.hpp"
#include "mihx/protocol/entity.hpp"
#include "mihx/protocol/packet_buffer.hpp"
#include "mihx/protocol/transcript.hpp"
#include "mihx/sim/event_queue.hpp"
#include "mihx/sim/link.hpp"

namespace mihx::protocol {

struct NetworkConfig {
  sim::Topology topology;
  double t_l2_ms = 45.35;
  double data_size = 1024;
  double cbr_interval_ms = 10;
  std::size_t buffer_capacity = 256;
  int n = 6;  ///< neighboring networks (message sizes)
  int m = 6;  ///< preferred PoAs: candidate MAGs MAG2..MAG(m+1)
  /// Downlink keeps running this long after the scheme finishes.
  double tail_ms = 500;
  /// Hard stop for the event loop.
  double horizon_ms = 120000;
  analytic::Catalog catalog = analytic::Catalog::table5();
  MnProfile profile;
};

/// What a MAG does with downlink packets for the MN.
enum class MagMode {
  Serve,    ///< launch on the access link
  Buffer,   ///< hold in the handover buffer; tunnel overhead retained
  Hold,     ///< hold until router advertisement; no tunnel overhead
  Forward,  ///< send through the MAG-MAG tunnel
  Drop,
};

struct DataStats {
  std::uint64_t generated = 0;
  std::uint64_t delivered = 0;
  std::uint64_t duplicates_suppressed = 0;
  std::uint64_t buffer_overflow_drops = 0;
  std::uint64_t lost() const { return generated - delivered; }
};

/// Single-MN PMIPv6 domain: one LMA, one MIIS, the serving MAG (MAG1) and
/// m candidate MAGs, with a constant-bit-rate downlink from the LMA.
class Network {
 public:
  Network(NetworkConfig cfg, sim::LinkTiming& timing);

  sim::EventQueue& queue() { return q_; }
  double now() const { return q_.now(); }
  Transcript& transcript() { return transcript_; }
  const Transcript& transcript() const { return transcript_; }
  BindingCache& bce() { return bce_; }
  const NetworkConfig& config() const { return cfg_; }
  sim::LinkTiming& timing() { return timing_; }

  EntityId mn() const { return {Role::MN, 1}; }
  EntityId lma() const { return {Role::LMA, 1}; }
  EntityId miis() const { return {Role::MIIS, 1}; }
  EntityId serving_mag() const { return {Role::MAG, 1}; }
  /// i-th candidate, 1-based.
  EntityId candidate(int i) const { return {Role::MAG, i + 1}; }
  EntityId access_point(EntityId mag) const { return {Role::PoA, mag.index}; }
  /// MAG behind an AP id such as "AP2"; nullopt when no such MAG exists.
  std::optional<EntityId> mag_of_access_point(std::string_view ap) const;

  std::int64_t size_of(std::string_view abbrev) const;

  using Done = std::function<void()>;

  // Signaling. Each call logs the event at the send time and runs `on_arrival`
  // when the message arrives.
  void air(EntityId from, EntityId to, std::string kind, std::string_view abbrev,
           std::string note, Done on_arrival = {});
  void air_sized(EntityId from, EntityId to, std::string kind, std::int64_t size,
                 std::string note, Done on_arrival = {});
  void wired(EntityId from, EntityId to, LinkKind link, std::string kind,
             std::string_view abbrev, std::string note, Done on_arrival = {});
  void wired_sized(EntityId from, EntityId to, LinkKind link, std::string kind,
                   std::int64_t size, std::string note, Done on_arrival = {});
  /// Untallied local event (no link crossed).
  void local(EntityId from, EntityId to, std::string kind, std::string note,
             std::int64_t size = 0);
  int hops(LinkKind link) const;

  /// PBU to the LMA and PBA back; `on_ack` runs at the MAG.
  /// `at_lma` runs right after the LMA updates its binding cache.
  void proxy_binding(const ProxyBindingUpdate& pbu, std::string note,
                     std::function<void(const ProxyBindingAck&)> on_ack = {},
                     Done at_lma = {});

  // Data plane.
  void start_traffic(double at_ms);
  void set_mode(EntityId mag, MagMode mode, std::optional<EntityId> peer = std::nullopt);
  MagMode mode(EntityId mag) const;
  /// Launches every buffered packet at `mag` (and switches it to Serve).
  void flush(EntityId mag);
  /// UNA-triggered release at the target: buffered packets go out first.
  void flush_on_una(const UnaEvent& una);
  /// Sends `mag`'s buffered packets through the tunnel to `peer`.
  void forward_buffer(EntityId mag, EntityId peer);
  /// Discards `mag`'s buffered packets.
  void discard_buffer(EntityId mag);
  std::size_t buffered(EntityId mag) const;

  /// Runs `fn` once `mag` has protected downlink (bicast or forwarding)
  /// and every unprotected frame it launched has reached the MN.
  void when_drained(EntityId mag, Done fn);

  void mn_detach();
  void mn_attach(EntityId mag);
  std::optional<EntityId> mn_attachment() const { return attached_; }
  /// Target MAG whose first delivery ends the handover interruption.
  void set_target(EntityId mag) { target_ = mag; }
  std::optional<EntityId> target() const { return target_; }
  /// Called once, at the first packet from the target that was neither
  /// buffered nor bicast nor tunneled.
  void on_first_native(Done fn) { on_first_native_ = std::move(fn); }

  /// Marks the scheme finished; traffic stops tail_ms later.
  void finish();
  bool finished() const { return finished_; }
  void run();

  const DataStats& data() const { return stats_; }
  std::optional<double> connectivity_loss_ms() const { return t_loss_; }
  std::optional<double> first_target_rx_ms() const { return t_first_rx_; }
  std::optional<double> handover_delay_ms() const;

 private:
  struct MagState {
    MagMode mode = MagMode::Drop;
    EntityId peer;
    PacketBuffer buffer;
    bool protection = false;
    double unprotected_until = 0;
    std::vector<Done> drain_waiters;
  };

  MagState& mag(EntityId id);
  const MagState& mag(EntityId id) const;
  void generate();
  void mag_receive(EntityId at, Packet p);
  void launch(EntityId at, Packet p);
  void mn_receive(EntityId from, Packet p);
  void check_drain(EntityId id);
  void log(EntityId from, EntityId to, std::string kind, std::int64_t size, LinkKind link,
           std::string note);

  NetworkConfig cfg_;
  sim::LinkTiming& timing_;
  sim::EventQueue q_;
  Transcript transcript_;
  BindingCache bce_;
  std::map<EntityId, MagState> mags_;

  std::optional<EntityId> attached_;
  std::optional<EntityId> target_;
  std::optional<double> t_loss_;
  std::optional<double> t_first_rx_;
  Done on_first_native_;
  bool first_native_seen_ = false;

  std::set<std::uint64_t> received_;
  DataStats stats_;
  std::uint64_t next_seq_ = 1;
  bool traffic_on_ = false;
  bool finished_ = false;
  double stop_at_ = 0;
};

}  // namespace mihx::protocol
