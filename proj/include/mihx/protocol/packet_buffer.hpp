#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "mihx/protocol/entity.hpp"

namespace mihx::protocol {

struct Packet {
  std::uint64_t seq = 0;
  double size = 0;
  double created_ms = 0;
  bool bicast = false;    // a copy also went to another MAG
  bool tunneled = false;  // arrived over the MAG-MAG tunnel
  bool buffered = false;  // released from a handover buffer
};

/// Per-MN handover buffer at a MAG. FIFO; on overflow the oldest packet is
/// dropped.
class PacketBuffer {
 public:
  explicit PacketBuffer(EntityId owner, std::size_t capacity = 256);

  /// Returns the packet evicted to make room, if any.
  std::optional<Packet> push(Packet p);
  /// Takes every buffered packet in arrival order. Only the first call
  /// after construction or reset() returns anything.
  std::vector<Packet> release();
  void reset();

  EntityId owner() const { return owner_; }
  std::size_t size() const { return q_.size(); }
  std::size_t capacity() const { return capacity_; }
  std::uint64_t drops() const { return drops_; }
  bool released() const { return released_; }

 private:
  EntityId owner_;
  std::size_t capacity_;
  std::deque<Packet> q_;
  std::uint64_t drops_ = 0;
  bool released_ = false;
};

/// Unsolicited neighbor advertisement from the MN, received by `target`.
struct UnaEvent {
  EntityId mn;
  EntityId target;
  double t_ms = 0;
};

/// Releases the target's buffer on UNA: buffered packets in arrival order,
/// then any natively routed packets. Throws std::invalid_argument when the
/// buffer is not owned by the UNA's receiver.
std::vector<Packet> buffer_release_on_una(PacketBuffer& buf, const UnaEvent& una,
                                          std::span<const Packet> native = {});

}  // namespace mihx::protocol
