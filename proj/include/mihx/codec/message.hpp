#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mihx/codec/header.hpp"
#include "mihx/codec/registry.hpp"
#include "mihx/codec/status.hpp"
#include "mihx/codec/tlv.hpp"
#include "mihx/codec/values.hpp"

namespace mihx::codec {

struct MihMessage {
  MihHeader header;
  std::string kind;
  std::vector<Tlv> tlvs;

  const Tlv* find(std::uint8_t code) const;

  friend bool operator==(const MihMessage&, const MihMessage&) = default;
};

/// Builds a message whose header IDs and payload_len agree with `kind`.
/// Throws CodecError(UnknownMessageKind) for kinds missing from `registry`.
MihMessage make_message(std::string_view kind, std::vector<Tlv> tlvs,
                        std::uint16_t transaction_id = 0,
                        const Registry& registry = Registry::builtin());

/// Header (with sid/opcode/aid taken from the kind and payload_len
/// recomputed) followed by the TLVs in order.
Bytes encode_message(const MihMessage& msg, const Registry& registry = Registry::builtin());

MihMessage decode_message(std::span<const std::uint8_t> octets,
                          const Registry& registry = Registry::builtin());

/// Mandatory-TLV and extended-value checks shared by encode and decode.
void validate_message(const MihMessage& msg, const Registry& registry = Registry::builtin());

// Extended N2N_HO_Commit exchange.

struct CommitRequestExt {
  std::string mn_id;
  LinkAddress lla_iid;
  IpAddress lmaa;
  std::vector<Prefix> hnps;

  friend bool operator==(const CommitRequestExt&, const CommitRequestExt&) = default;
};

inline constexpr std::string_view kCommitRequestExt = "MIH_N2N_HO_Commit_request_ext";
inline constexpr std::string_view kCommitResponseExt = "MIH_N2N_HO_Commit_response_ext";

/// TLVs in order: MN ID, MN LLA-IID (101), LMA address (102), HNP list (103).
/// Throws CodecError(EmptyHnpList) for an empty prefix list.
MihMessage build_commit_request_ext(std::string_view mn_id, const LinkAddress& lla_iid,
                                    const IpAddress& lmaa, std::span<const Prefix> hnps,
                                    std::uint16_t transaction_id = 0);
MihMessage build_commit_response_ext(StatusCode status, std::uint16_t transaction_id = 0);

CommitRequestExt parse_commit_request_ext(const MihMessage& msg);
StatusCode parse_status(const MihMessage& msg);

}  // namespace mihx::codec
