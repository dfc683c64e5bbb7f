#include "mihx/codec/tlv.hpp"

#include <string>

#include "mihx/codec/error.hpp"

namespace mihx::codec {

namespace {

std::size_t length_octets(std::size_t len) {
  if (len <= 128) return 1;
  return len <= 0xff ? 2 : 3;
}

}  // namespace

std::size_t encoded_tlv_size(const Tlv& tlv) {
  return 1 + length_octets(tlv.value.size()) + tlv.value.size();
}

void append_tlv(Bytes& out, const Tlv& tlv) {
  const std::size_t len = tlv.value.size();
  if (len > kMaxTlvValue) {
    throw CodecError(Errc::ValueTooLong, 0,
                     "TLV " + std::to_string(tlv.code) + " value of " +
                         std::to_string(len) + " octets");
  }
  out.push_back(tlv.code);
  if (len <= 128) {
    out.push_back(static_cast<std::uint8_t>(len));
  } else if (len <= 0xff) {
    out.push_back(0x81);
    out.push_back(static_cast<std::uint8_t>(len));
  } else {
    out.push_back(0x82);
    out.push_back(static_cast<std::uint8_t>(len >> 8));
    out.push_back(static_cast<std::uint8_t>(len & 0xff));
  }
  out.insert(out.end(), tlv.value.begin(), tlv.value.end());
}

Bytes encode_tlv(const Tlv& tlv) {
  Bytes out;
  out.reserve(encoded_tlv_size(tlv));
  append_tlv(out, tlv);
  return out;
}

TlvDecode decode_tlv(std::span<const std::uint8_t> octets, std::size_t base_offset) {
  if (octets.size() < 2) {
    throw CodecError(Errc::Truncated, base_offset + octets.size(),
                     "TLV needs at least a code and a length octet");
  }
  const std::uint8_t code = octets[0];
  const std::uint8_t first = octets[1];
  std::size_t pos = 2;
  std::size_t len = first;
  if (first > 128) {
    const std::size_t k = first - 128u;
    if (octets.size() < 2 + k) {
      throw CodecError(Errc::Truncated, base_offset + octets.size(),
                       "length field announces " + std::to_string(k) + " octets");
    }
    if (octets[2] == 0) {
      throw CodecError(Errc::MalformedLength, base_offset + 2, "leading zero length octet");
    }
    if (k > 2) {
      throw CodecError(Errc::ValueTooLong, base_offset + 1,
                       std::to_string(k) + "-octet length exceeds 16 bits");
    }
    len = 0;
    for (std::size_t i = 0; i < k; ++i) len = len << 8 | octets[2 + i];
    if (len <= 128) {
      throw CodecError(Errc::MalformedLength, base_offset + 1,
                       "length " + std::to_string(len) + " must use the short form");
    }
    pos += k;
  }
  if (octets.size() - pos < len) {
    throw CodecError(Errc::Truncated, base_offset + octets.size(),
                     "TLV " + std::to_string(code) + " declares " + std::to_string(len) +
                         " value octets, " + std::to_string(octets.size() - pos) +
                         " available");
  }
  TlvDecode out;
  out.tlv.code = code;
  out.tlv.value.assign(octets.begin() + static_cast<std::ptrdiff_t>(pos),
                       octets.begin() + static_cast<std::ptrdiff_t>(pos + len));
  out.rest = octets.subspan(pos + len);
  return out;
}

}  // namespace mihx::codec
