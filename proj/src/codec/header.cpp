#include "mihx/codec/header.hpp"

#include <string>

#include "mihx/codec/error.hpp"

namespace mihx::codec {

namespace {

void check(unsigned value, unsigned bits, const char* name) {
  if (value >= (1u << bits)) {
    throw CodecError(Errc::FieldOutOfRange, 0,
                     std::string(name) + "=" + std::to_string(value) + " exceeds " +
                         std::to_string(bits) + " bits");
  }
}

}  // namespace

std::array<std::uint8_t, kHeaderSize> encode_header(const MihHeader& h) {
  check(h.version, 4, "version");
  check(h.fragment_no, 7, "fragment_no");
  check(h.sid, 4, "sid");
  check(h.opcode, 2, "opcode");
  check(h.aid, 10, "aid");
  check(h.transaction_id, 12, "transaction_id");

  std::array<std::uint8_t, kHeaderSize> out{};
  out[0] = static_cast<std::uint8_t>(h.version << 4 | h.ack_req << 3 | h.ack_rsp << 2 |
                                     h.uir << 1 | static_cast<unsigned>(h.more));
  out[1] = static_cast<std::uint8_t>(h.fragment_no << 1);
  const unsigned mid = static_cast<unsigned>(h.sid) << 12 |
                       static_cast<unsigned>(h.opcode) << 10 | h.aid;
  out[2] = static_cast<std::uint8_t>(mid >> 8);
  out[3] = static_cast<std::uint8_t>(mid & 0xff);
  out[4] = static_cast<std::uint8_t>(h.transaction_id >> 8);
  out[5] = static_cast<std::uint8_t>(h.transaction_id & 0xff);
  out[6] = static_cast<std::uint8_t>(h.payload_len >> 8);
  out[7] = static_cast<std::uint8_t>(h.payload_len & 0xff);
  return out;
}

MihHeader decode_header(std::span<const std::uint8_t> o) {
  if (o.size() < kHeaderSize) {
    throw CodecError(Errc::Truncated, o.size(),
                     "header needs 8 octets, got " + std::to_string(o.size()));
  }
  MihHeader h;
  h.version = o[0] >> 4;
  h.ack_req = (o[0] >> 3) & 1;
  h.ack_rsp = (o[0] >> 2) & 1;
  h.uir = (o[0] >> 1) & 1;
  h.more = o[0] & 1;
  h.fragment_no = o[1] >> 1;
  const unsigned mid = static_cast<unsigned>(o[2]) << 8 | o[3];
  h.sid = static_cast<std::uint8_t>(mid >> 12);
  h.opcode = static_cast<std::uint8_t>((mid >> 10) & 0x3);
  h.aid = static_cast<std::uint16_t>(mid & 0x3ff);
  h.transaction_id = static_cast<std::uint16_t>((o[4] & 0x0f) << 8 | o[5]);
  h.payload_len = static_cast<std::uint16_t>(o[6] << 8 | o[7]);
  return h;
}

}  // namespace mihx::codec
