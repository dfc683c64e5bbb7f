#pragma once

#include <string>
#include <string_view>

#include "mihx/codec/message.hpp"

namespace mihx::cli {

/// Field-spec text, one `key = value` per line, `#` starts a comment:
///
///   kind = MIH_N2N_HO_Commit_request_ext
///   transaction_id = 7
///   mn_id = mn1@example.net
///   lla_iid = iid:00005efffe100001
///   lmaa = 2001:db8::1
///   hnp = 2001:db8:1::/64        (repeatable; one TLV for all lines)
///   status = 130
///   tlv.<code> = <hex>           (any other TLV, value as hex)
///
/// Header keys: version, ack_req, ack_rsp, uir, more, fragment_no.
/// TLVs are emitted in the order their keys first appear. Syntax errors
/// throw std::invalid_argument with the line number.
codec::MihMessage parse_message_text(std::string_view text);

/// Inverse of parse_message_text; status values carry their meaning as a comment.
std::string format_message_text(const codec::MihMessage& msg);

std::string encode_text_to_hex(std::string_view text);
std::string decode_hex_to_text(std::string_view hex);

}  // namespace mihx::cli
