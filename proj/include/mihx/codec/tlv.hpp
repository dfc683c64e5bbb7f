#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mihx/codec/hex.hpp"

namespace mihx::codec {

/// TLV type codes used by this codec. Codes up to 100 follow the 802.21
/// assignment range; 101-103 carry the MN profile for pre-registration.
namespace tlv_code {
inline constexpr std::uint8_t kSourceId = 1;
inline constexpr std::uint8_t kDestinationId = 2;
inline constexpr std::uint8_t kStatus = 3;
inline constexpr std::uint8_t kMnId = 4;
inline constexpr std::uint8_t kMnLlaIid = 101;
inline constexpr std::uint8_t kLmaAddress = 102;
inline constexpr std::uint8_t kHomeNetworkPrefix = 103;
}  // namespace tlv_code

inline constexpr bool is_extended_code(std::uint8_t code) {
  return code >= tlv_code::kMnLlaIid && code <= tlv_code::kHomeNetworkPrefix;
}

struct Tlv {
  std::uint8_t code = 0;
  Bytes value;

  friend bool operator==(const Tlv&, const Tlv&) = default;
};

/// Maximum value length representable by the length field.
inline constexpr std::size_t kMaxTlvValue = 0xffff;

/// code ‖ length ‖ value. Lengths up to 128 use a single octet; longer ones
/// use 0x80+k followed by k big-endian octets with k minimal.
Bytes encode_tlv(const Tlv& tlv);
void append_tlv(Bytes& out, const Tlv& tlv);
std::size_t encoded_tlv_size(const Tlv& tlv);

struct TlvDecode {
  Tlv tlv;
  std::span<const std::uint8_t> rest;
};

/// Consumes exactly one TLV. `base_offset` is added to error offsets so
/// message-level callers report positions in the whole frame.
TlvDecode decode_tlv(std::span<const std::uint8_t> octets, std::size_t base_offset = 0);

}  // namespace mihx::codec
