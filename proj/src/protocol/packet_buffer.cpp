#include "mihx/protocol/packet_buffer.hpp"

#include <stdexcept>

namespace mihx::protocol {

PacketBuffer::PacketBuffer(EntityId owner, std::size_t capacity)
    : owner_(owner), capacity_(capacity) {
  if (capacity_ == 0) throw std::invalid_argument("PacketBuffer: capacity must be positive");
}

std::optional<Packet> PacketBuffer::push(Packet p) {
  std::optional<Packet> evicted;
  if (q_.size() == capacity_) {
    evicted = q_.front();
    q_.pop_front();
    ++drops_;
  }
  p.buffered = true;
  q_.push_back(p);
  return evicted;
}

std::vector<Packet> PacketBuffer::release() {
  if (released_) return {};
  released_ = true;
  std::vector<Packet> out(q_.begin(), q_.end());
  q_.clear();
  return out;
}

void PacketBuffer::reset() {
  q_.clear();
  released_ = false;
}

std::vector<Packet> buffer_release_on_una(PacketBuffer& buf, const UnaEvent& una,
                                          std::span<const Packet> native) {
  if (buf.owner() != una.target) {
    throw std::invalid_argument("UNA received by " + una.target.name() +
                                " but buffer belongs to " + buf.owner().name());
  }
  auto out = buf.release();
  out.insert(out.end(), native.begin(), native.end());
  return out;
}

}  // namespace mihx::protocol
