#include "mihx/protocol/network.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

#include "mihx/analytic/delay.hpp"

namespace mihx::protocol {

Network::Network(NetworkConfig cfg, sim::LinkTiming& timing)
    : cfg_(std::move(cfg)), timing_(timing) {
  cfg_.profile.validate();
  if (cfg_.cbr_interval_ms <= 0) throw std::invalid_argument("cbr_interval_ms must be positive");
  // Predictive and reactive runs always need one neighbor, even with m = 0.
  const int mags = std::max(cfg_.m, 1) + 1;
  for (int i = 1; i <= mags; ++i) {
    EntityId id{Role::MAG, i};
    mags_.emplace(id, MagState{MagMode::Drop, id, PacketBuffer(id, cfg_.buffer_capacity), false, 0, {}});
  }
  mag(serving_mag()).mode = MagMode::Serve;
  bce_.bootstrap(cfg_.profile.mn_id, cfg_.profile.hnps, serving_mag());
  attached_ = serving_mag();
}

std::optional<EntityId> Network::mag_of_access_point(std::string_view ap) const {
  try {
    auto id = EntityId::parse(ap);
    if (id.role != Role::PoA) return std::nullopt;
    EntityId m{Role::MAG, id.index};
    if (mags_.count(m) == 0) return std::nullopt;
    return m;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::int64_t Network::size_of(std::string_view abbrev) const {
  return cfg_.catalog.size(abbrev, cfg_.n, cfg_.m);
}

Network::MagState& Network::mag(EntityId id) {
  auto it = mags_.find(id);
  if (it == mags_.end()) throw std::out_of_range("no such MAG: " + id.name());
  return it->second;
}

const Network::MagState& Network::mag(EntityId id) const {
  auto it = mags_.find(id);
  if (it == mags_.end()) throw std::out_of_range("no such MAG: " + id.name());
  return it->second;
}

int Network::hops(LinkKind link) const {
  switch (link) {
    case LinkKind::Air: return cfg_.topology.h_mn_mag;
    case LinkKind::MagMag: return cfg_.topology.h_mag_mag;
    case LinkKind::MagLma: return cfg_.topology.h_mag_lma;
    case LinkKind::MagMiis: return cfg_.topology.h_mag_miis;
    case LinkKind::Local: return 0;
  }
  return 0;
}

void Network::log(EntityId from, EntityId to, std::string kind, std::int64_t size, LinkKind link,
                  std::string note) {
  transcript_.add(TranscriptEvent{now(), from.name(), to.name(), std::move(kind), size, link,
                                  std::move(note)});
}

void Network::air(EntityId from, EntityId to, std::string kind, std::string_view abbrev,
                  std::string note, Done on_arrival) {
  air_sized(from, to, std::move(kind), size_of(abbrev), std::move(note), std::move(on_arrival));
}

void Network::air_sized(EntityId from, EntityId to, std::string kind, std::int64_t size,
                        std::string note, Done on_arrival) {
  auto d = timing_.wireless(static_cast<double>(size), true);
  if (d.retransmissions > 0) note += fmt::format(" [retx={}]", d.retransmissions);
  log(from, to, std::move(kind), size, LinkKind::Air, std::move(note));
  if (on_arrival) q_.schedule_in(d.delay_ms, std::move(on_arrival));
}

void Network::wired(EntityId from, EntityId to, LinkKind link, std::string kind,
                    std::string_view abbrev, std::string note, Done on_arrival) {
  wired_sized(from, to, link, std::move(kind), size_of(abbrev), std::move(note),
              std::move(on_arrival));
}

void Network::wired_sized(EntityId from, EntityId to, LinkKind link, std::string kind,
                          std::int64_t size, std::string note, Done on_arrival) {
  const double d = timing_.wired(static_cast<double>(size), hops(link));
  log(from, to, std::move(kind), size, link, std::move(note));
  if (on_arrival) q_.schedule_in(d, std::move(on_arrival));
}

void Network::local(EntityId from, EntityId to, std::string kind, std::string note,
                    std::int64_t size) {
  log(from, to, std::move(kind), size, LinkKind::Local, std::move(note));
}

void Network::proxy_binding(const ProxyBindingUpdate& pbu, std::string note,
                            std::function<void(const ProxyBindingAck&)> on_ack, Done at_lma) {
  wired(pbu.mag, lma(), LinkKind::MagLma, "PBU", "M_PBU", std::move(note),
        [this, pbu, on_ack = std::move(on_ack), at_lma = std::move(at_lma)] {
          auto ack = lma_process_pbu(bce_, pbu);
          if (at_lma) at_lma();
          std::string n = ack.ignored ? "ignored: sender is not the serving MAG"
                                      : fmt::format("status={}", ack.status);
          wired(lma(), pbu.mag, LinkKind::MagLma, "PBA", "M_PBA", std::move(n), [ack, on_ack] {
            if (on_ack) on_ack(ack);
          });
        });
}

// ---- data plane ----

void Network::start_traffic(double at_ms) {
  if (traffic_on_) return;
  traffic_on_ = true;
  q_.schedule_at(at_ms, [this] { generate(); });
}

void Network::generate() {
  if (now() >= cfg_.horizon_ms || (finished_ && now() >= stop_at_)) return;
  Packet p{next_seq_++, cfg_.data_size, now(), false, false, false};
  ++stats_.generated;
  const auto targets = bce_.downlink_targets(cfg_.profile.mn_id);
  p.bicast = targets.size() > 1;
  const double d = timing_.wired(cfg_.data_size, cfg_.topology.h_mag_lma);
  for (auto t : targets) {
    q_.schedule_in(d, [this, t, p] { mag_receive(t, p); });
  }
  q_.schedule_in(cfg_.cbr_interval_ms, [this] { generate(); });
}

void Network::mag_receive(EntityId at, Packet p) {
  auto& st = mag(at);
  if (p.bicast && !st.protection) {
    st.protection = true;
    check_drain(at);
  }
  switch (st.mode) {
    case MagMode::Serve:
      launch(at, p);
      break;
    case MagMode::Buffer:
      p.size = cfg_.data_size + analytic::kTunnelOverhead;
      if (st.buffer.push(p)) ++stats_.buffer_overflow_drops;
      break;
    case MagMode::Hold:
      if (st.buffer.push(p)) ++stats_.buffer_overflow_drops;
      break;
    case MagMode::Forward: {
      p.tunneled = true;
      p.size = cfg_.data_size + analytic::kTunnelOverhead;
      const auto peer = st.peer;
      q_.schedule_in(timing_.wired(p.size, cfg_.topology.h_mag_mag),
                     [this, peer, p] { mag_receive(peer, p); });
      break;
    }
    case MagMode::Drop:
      break;
  }
}

void Network::launch(EntityId at, Packet p) {
  auto& st = mag(at);
  const double arrival = now() + timing_.wireless(p.size, false).delay_ms;
  if (!p.bicast) st.unprotected_until = std::max(st.unprotected_until, arrival);
  q_.schedule_at(arrival, [this, at, p] { mn_receive(at, p); });
}

void Network::mn_receive(EntityId from, Packet p) {
  if (attached_ != from) return;  // lost on the air
  if (received_.insert(p.seq).second) {
    ++stats_.delivered;
  } else {
    ++stats_.duplicates_suppressed;
  }
  if (!t_loss_ || target_ != from) return;
  if (!t_first_rx_) {
    t_first_rx_ = now();
    log(from, mn(), "DATA", static_cast<std::int64_t>(p.size), LinkKind::Air,
        fmt::format("first downlink packet after handover, seq={} (arrival)", p.seq));
  }
  if (!first_native_seen_ && !p.bicast && !p.tunneled && !p.buffered) {
    first_native_seen_ = true;
    if (on_first_native_) q_.schedule_in(0, std::move(on_first_native_));
  }
}

void Network::set_mode(EntityId id, MagMode m, std::optional<EntityId> peer) {
  auto& st = mag(id);
  if ((m == MagMode::Buffer || m == MagMode::Hold) && st.mode != MagMode::Buffer &&
      st.mode != MagMode::Hold) {
    st.buffer.reset();
  }
  st.mode = m;
  if (peer) st.peer = *peer;
  if (m == MagMode::Forward || m == MagMode::Buffer) {
    st.protection = true;
    check_drain(id);
  }
}

MagMode Network::mode(EntityId id) const { return mag(id).mode; }

std::size_t Network::buffered(EntityId id) const { return mag(id).buffer.size(); }

void Network::flush(EntityId id) {
  auto& st = mag(id);
  st.mode = MagMode::Serve;
  for (const auto& p : st.buffer.release()) launch(id, p);
}

void Network::flush_on_una(const UnaEvent& una) {
  auto& st = mag(una.target);
  st.mode = MagMode::Serve;
  for (const auto& p : buffer_release_on_una(st.buffer, una)) launch(una.target, p);
}

void Network::forward_buffer(EntityId id, EntityId peer) {
  auto& st = mag(id);
  for (auto p : st.buffer.release()) {
    p.tunneled = true;
    p.buffered = false;
    p.size = cfg_.data_size + analytic::kTunnelOverhead;
    q_.schedule_in(timing_.wired(p.size, cfg_.topology.h_mag_mag),
                   [this, peer, p] { mag_receive(peer, p); });
  }
}

void Network::discard_buffer(EntityId id) { (void)mag(id).buffer.release(); }

void Network::when_drained(EntityId id, Done fn) {
  mag(id).drain_waiters.push_back(std::move(fn));
  check_drain(id);
}

void Network::check_drain(EntityId id) {
  auto& st = mag(id);
  if (st.drain_waiters.empty() || !st.protection) return;
  if (now() >= st.unprotected_until) {
    auto waiters = std::move(st.drain_waiters);
    st.drain_waiters.clear();
    for (auto& w : waiters) q_.schedule_in(0, std::move(w));
  } else {
    q_.schedule_at(st.unprotected_until, [this, id] { check_drain(id); });
  }
}

void Network::mn_detach() {
  attached_.reset();
  t_loss_ = now();
}

void Network::mn_attach(EntityId m) { attached_ = m; }

void Network::finish() {
  if (finished_) return;
  finished_ = true;
  stop_at_ = now() + cfg_.tail_ms;
}

void Network::run() { q_.run(cfg_.horizon_ms + cfg_.tail_ms + 10000); }

std::optional<double> Network::handover_delay_ms() const {
  if (!t_loss_ || !t_first_rx_) return std::nullopt;
  return *t_first_rx_ - *t_loss_;
}

}  // namespace mihx::protocol
