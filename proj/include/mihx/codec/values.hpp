#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mihx/codec/hex.hpp"
#include "mihx/codec/tlv.hpp"

namespace mihx::codec {

/// MN link-layer identifier carried in TLV 101: a kind octet followed by
/// either a 6-octet MAC address or an 8-octet interface identifier.
struct LinkAddress {
  enum class Kind : std::uint8_t { Mac48 = 1, InterfaceId = 2 };

  Kind kind = Kind::InterfaceId;
  Bytes octets;

  static LinkAddress interface_id(std::uint64_t iid);
  static LinkAddress mac48(std::span<const std::uint8_t, 6> mac);

  std::string to_string() const;
  /// "iid:0011223344556677" or "mac:00:11:22:33:44:55".
  static LinkAddress parse(std::string_view text);

  friend bool operator==(const LinkAddress&, const LinkAddress&) = default;
};

/// IPv4 or IPv6 transport address carried in TLV 102 (family octet + address).
struct IpAddress {
  enum class Family : std::uint8_t { V4 = 1, V6 = 2 };

  Family family = Family::V6;
  Bytes octets;

  static IpAddress parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const IpAddress&, const IpAddress&) = default;
};

struct Prefix {
  std::uint8_t length = 64;
  std::array<std::uint8_t, 16> octets{};

  /// "2001:db8:1::/64"
  static Prefix parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Prefix&, const Prefix&) = default;
};

Tlv make_lla_iid_tlv(const LinkAddress& addr);
Tlv make_lma_address_tlv(const IpAddress& addr);
Tlv make_hnp_list_tlv(std::span<const Prefix> hnps);

// Value decoders. They enforce the exact shapes of the extended TLVs and
// throw CodecError(InvalidTlvValue / Truncated / MalformedLength) otherwise.
// `offset` is the position of the value's first octet, used in errors.
LinkAddress decode_lla_iid(std::span<const std::uint8_t> value, std::size_t offset = 0);
IpAddress decode_lma_address(std::span<const std::uint8_t> value, std::size_t offset = 0);
std::vector<Prefix> decode_hnp_list(std::span<const std::uint8_t> value, std::size_t offset = 0);

/// Checks the value shape for codes 101-103; other codes are accepted as-is.
void validate_tlv_value(const Tlv& tlv, std::size_t offset = 0);

}  // namespace mihx::codec
