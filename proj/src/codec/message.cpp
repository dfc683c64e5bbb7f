#include "mihx/codec/message.hpp"

#include <algorithm>
#include <string>

#include "mihx/codec/error.hpp"

namespace mihx::codec {

namespace {

const MessageKind& lookup(std::string_view kind, const Registry& registry) {
  const MessageKind* k = registry.find(kind);
  if (!k) {
    throw CodecError(Errc::UnknownMessageKind, 0, "no registry entry for " + std::string(kind));
  }
  return *k;
}

std::size_t payload_size(const std::vector<Tlv>& tlvs) {
  std::size_t n = 0;
  for (const auto& t : tlvs) n += encoded_tlv_size(t);
  return n;
}

}  // namespace

const Tlv* MihMessage::find(std::uint8_t code) const {
  auto it = std::find_if(tlvs.begin(), tlvs.end(), [code](const Tlv& t) { return t.code == code; });
  return it == tlvs.end() ? nullptr : &*it;
}

void validate_message(const MihMessage& msg, const Registry& registry) {
  const MessageKind& kind = lookup(msg.kind, registry);
  for (std::uint8_t code : kind.mandatory_tlvs) {
    if (!msg.find(code)) {
      throw CodecError(Errc::MissingMandatoryTlv, 0,
                       msg.kind + " requires TLV " + std::to_string(code) + " (" +
                           std::string(registry.tlv_name(code)) + ")");
    }
  }
  std::size_t offset = kHeaderSize;
  for (const auto& t : msg.tlvs) {
    const std::size_t header_len = encoded_tlv_size(t) - t.value.size();
    validate_tlv_value(t, offset + header_len);
    offset += encoded_tlv_size(t);
  }
}

MihMessage make_message(std::string_view kind, std::vector<Tlv> tlvs,
                        std::uint16_t transaction_id, const Registry& registry) {
  const MessageKind& k = lookup(kind, registry);
  MihMessage m;
  m.kind = k.name;
  m.header.sid = k.sid;
  m.header.opcode = k.opcode;
  m.header.aid = k.aid;
  m.header.transaction_id = transaction_id;
  const std::size_t len = payload_size(tlvs);
  if (len > 0xffff) {
    throw CodecError(Errc::ValueTooLong, 0, "payload of " + std::to_string(len) + " octets");
  }
  m.header.payload_len = static_cast<std::uint16_t>(len);
  m.tlvs = std::move(tlvs);
  return m;
}

Bytes encode_message(const MihMessage& msg, const Registry& registry) {
  validate_message(msg, registry);
  const MessageKind& k = lookup(msg.kind, registry);
  const std::size_t len = payload_size(msg.tlvs);
  if (len > 0xffff) {
    throw CodecError(Errc::ValueTooLong, 0, "payload of " + std::to_string(len) + " octets");
  }
  MihHeader h = msg.header;
  h.sid = k.sid;
  h.opcode = k.opcode;
  h.aid = k.aid;
  h.payload_len = static_cast<std::uint16_t>(len);

  Bytes out;
  out.reserve(kHeaderSize + len);
  const auto header = encode_header(h);
  out.insert(out.end(), header.begin(), header.end());
  for (const auto& t : msg.tlvs) append_tlv(out, t);
  return out;
}

MihMessage decode_message(std::span<const std::uint8_t> octets, const Registry& registry) {
  MihMessage m;
  m.header = decode_header(octets);
  const MessageKind* k = registry.find(m.header.sid, m.header.opcode, m.header.aid);
  if (!k) {
    throw CodecError(Errc::UnknownMessageKind, 2,
                     "sid=" + std::to_string(m.header.sid) +
                         " opcode=" + std::to_string(m.header.opcode) +
                         " aid=" + std::to_string(m.header.aid));
  }
  m.kind = k->name;
  const std::size_t available = octets.size() - kHeaderSize;
  if (m.header.payload_len > available) {
    throw CodecError(Errc::Truncated, octets.size(),
                     "payload_len " + std::to_string(m.header.payload_len) + " exceeds " +
                         std::to_string(available) + " available octets");
  }
  auto payload = octets.subspan(kHeaderSize, m.header.payload_len);
  std::size_t offset = kHeaderSize;
  while (!payload.empty()) {
    auto [tlv, rest] = decode_tlv(payload, offset);
    offset += payload.size() - rest.size();
    m.tlvs.push_back(std::move(tlv));
    payload = rest;
  }
  validate_message(m, registry);
  return m;
}

MihMessage build_commit_request_ext(std::string_view mn_id, const LinkAddress& lla_iid,
                                    const IpAddress& lmaa, std::span<const Prefix> hnps,
                                    std::uint16_t transaction_id) {
  if (hnps.empty()) throw CodecError(Errc::EmptyHnpList, 0, "commit request needs an HNP");
  std::vector<Tlv> tlvs;
  tlvs.push_back(Tlv{tlv_code::kMnId, Bytes(mn_id.begin(), mn_id.end())});
  tlvs.push_back(make_lla_iid_tlv(lla_iid));
  tlvs.push_back(make_lma_address_tlv(lmaa));
  tlvs.push_back(make_hnp_list_tlv(hnps));
  return make_message(kCommitRequestExt, std::move(tlvs), transaction_id);
}

MihMessage build_commit_response_ext(StatusCode status, std::uint16_t transaction_id) {
  return make_message(kCommitResponseExt, {Tlv{tlv_code::kStatus, {status.value}}},
                      transaction_id);
}

CommitRequestExt parse_commit_request_ext(const MihMessage& msg) {
  validate_message(msg);
  CommitRequestExt out;
  const Tlv* id = msg.find(tlv_code::kMnId);
  out.mn_id.assign(id->value.begin(), id->value.end());
  out.lla_iid = decode_lla_iid(msg.find(tlv_code::kMnLlaIid)->value);
  out.lmaa = decode_lma_address(msg.find(tlv_code::kLmaAddress)->value);
  out.hnps = decode_hnp_list(msg.find(tlv_code::kHomeNetworkPrefix)->value);
  return out;
}

StatusCode parse_status(const MihMessage& msg) {
  const Tlv* t = msg.find(tlv_code::kStatus);
  if (!t) throw CodecError(Errc::MissingMandatoryTlv, 0, msg.kind + " carries no status TLV");
  validate_tlv_value(*t);
  return StatusCode{t->value[0]};
}

}  // namespace mihx::codec
