#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace mihx::codec {

inline constexpr std::size_t kHeaderSize = 8;

/// 802.21-style fixed header:
///   version(4) ack_req(1) ack_rsp(1) uir(1) more(1) | fragment_no(7) rsvd(1)
///   sid(4) opcode(2) aid(10) | rsvd(4) transaction_id(12) | payload_len(16)
struct MihHeader {
  std::uint8_t version = 1;
  bool ack_req = false;
  bool ack_rsp = false;
  bool uir = false;
  bool more = false;
  std::uint8_t fragment_no = 0;
  std::uint8_t sid = 0;
  std::uint8_t opcode = 0;
  std::uint16_t aid = 0;
  std::uint16_t transaction_id = 0;
  std::uint16_t payload_len = 0;

  friend bool operator==(const MihHeader&, const MihHeader&) = default;
};

namespace opcode {
inline constexpr std::uint8_t kRequest = 1;
inline constexpr std::uint8_t kResponse = 2;
inline constexpr std::uint8_t kIndication = 3;
}  // namespace opcode

/// Throws CodecError(FieldOutOfRange) if a field exceeds its bit width.
std::array<std::uint8_t, kHeaderSize> encode_header(const MihHeader& h);
/// Requires at least 8 octets (Truncated otherwise). Reserved bits are ignored.
MihHeader decode_header(std::span<const std::uint8_t> octets);

}  // namespace mihx::codec
