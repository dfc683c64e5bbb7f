#include "mihx/cli/codec_text.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "mihx/codec/error.hpp"
#include "mihx/codec/hex.hpp"
#include "mihx/codec/status.hpp"

namespace mihx::cli {

namespace {

namespace tc = codec::tlv_code;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& why) {
  throw std::invalid_argument(fmt::format("line {}: {}", line, why));
}

template <typename Int>
Int number(std::size_t line, std::string_view key, std::string_view v, Int max) {
  unsigned long long out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size() || out > max) {
    fail(line, fmt::format("{}: expected an integer in [0, {}], got '{}'", key, max, v));
  }
  return static_cast<Int>(out);
}

bool printable(const codec::Bytes& v) {
  return !v.empty() && std::all_of(v.begin(), v.end(), [](std::uint8_t c) {
           return c > 0x20 && c < 0x7f && c != '#';
         });
}

std::string hex_compact(const codec::Bytes& v) {
  std::string s;
  for (auto b : v) s += fmt::format("{:02x}", b);
  return s;
}

constexpr std::pair<std::uint8_t, std::string_view> kTextTlvs[] = {
    {tc::kSourceId, "source_id"}, {tc::kDestinationId, "destination_id"}, {tc::kMnId, "mn_id"}};

}  // namespace

codec::MihMessage parse_message_text(std::string_view text) {
  codec::MihMessage msg;
  bool have_kind = false;
  std::vector<codec::Prefix> hnps;
  std::optional<std::size_t> hnp_slot;

  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));

    auto add = [&](std::uint8_t code, codec::Bytes v) { msg.tlvs.push_back({code, std::move(v)}); };
    try {
      if (key == "kind") {
        msg.kind = value;
        have_kind = true;
      } else if (key == "transaction_id") {
        msg.header.transaction_id = number<std::uint16_t>(line_no, key, value, 0x0fff);
      } else if (key == "version") {
        msg.header.version = number<std::uint8_t>(line_no, key, value, 15);
      } else if (key == "ack_req") {
        msg.header.ack_req = number<std::uint8_t>(line_no, key, value, 1);
      } else if (key == "ack_rsp") {
        msg.header.ack_rsp = number<std::uint8_t>(line_no, key, value, 1);
      } else if (key == "uir") {
        msg.header.uir = number<std::uint8_t>(line_no, key, value, 1);
      } else if (key == "more") {
        msg.header.more = number<std::uint8_t>(line_no, key, value, 1);
      } else if (key == "fragment_no") {
        msg.header.fragment_no = number<std::uint8_t>(line_no, key, value, 127);
      } else if (key == "status") {
        add(tc::kStatus, {number<std::uint8_t>(line_no, key, value, 255)});
      } else if (key == "lla_iid") {
        msg.tlvs.push_back(codec::make_lla_iid_tlv(codec::LinkAddress::parse(value)));
      } else if (key == "lmaa") {
        msg.tlvs.push_back(codec::make_lma_address_tlv(codec::IpAddress::parse(value)));
      } else if (key == "hnp") {
        hnps.push_back(codec::Prefix::parse(value));
        if (!hnp_slot) {
          hnp_slot = msg.tlvs.size();
          add(tc::kHomeNetworkPrefix, {});
        }
      } else if (key.starts_with("tlv.")) {
        auto code = number<std::uint8_t>(line_no, key, key.substr(4), 255);
        add(code, codec::from_hex(value));
      } else {
        auto it = std::find_if(std::begin(kTextTlvs), std::end(kTextTlvs),
                               [&](const auto& p) { return p.second == key; });
        if (it == std::end(kTextTlvs)) fail(line_no, fmt::format("unknown key '{}'", key));
        add(it->first, codec::Bytes(value.begin(), value.end()));
      }
    } catch (const codec::CodecError& e) {
      fail(line_no, e.what());
    } catch (const std::invalid_argument& e) {
      if (std::string_view(e.what()).starts_with("line ")) throw;
      fail(line_no, e.what());
    }
  }
  if (!have_kind) throw std::invalid_argument("missing 'kind'");
  if (hnp_slot) msg.tlvs[*hnp_slot] = codec::make_hnp_list_tlv(hnps);

  const auto* kind = codec::Registry::builtin().find(msg.kind);
  if (kind == nullptr) throw std::invalid_argument("unknown message kind '" + msg.kind + "'");
  msg.header.sid = kind->sid;
  msg.header.opcode = kind->opcode;
  msg.header.aid = kind->aid;
  return msg;
}

std::string format_message_text(const codec::MihMessage& msg) {
  const auto& h = msg.header;
  const auto& reg = codec::Registry::builtin();
  std::string out;
  out += fmt::format("kind = {}\n", msg.kind);
  out += fmt::format("# sid={} opcode={} aid={} payload_len={}\n", h.sid, h.opcode, h.aid,
                     h.payload_len);
  out += fmt::format("version = {}\n", h.version);
  out += fmt::format("ack_req = {}\nack_rsp = {}\nuir = {}\nmore = {}\n", int(h.ack_req),
                     int(h.ack_rsp), int(h.uir), int(h.more));
  out += fmt::format("fragment_no = {}\n", h.fragment_no);
  out += fmt::format("transaction_id = {}\n", h.transaction_id);

  for (const auto& t : msg.tlvs) {
    auto text_key = std::find_if(std::begin(kTextTlvs), std::end(kTextTlvs),
                                 [&](const auto& p) { return p.first == t.code; });
    if (t.code == tc::kStatus && t.value.size() == 1) {
      const codec::StatusCode s{t.value[0]};
      out += fmt::format("status = {}  # {}", s.value, s.meaning());
      if (!s.reference().empty()) out += fmt::format(" ({})", s.reference());
      out += s.accepted() ? ", accept\n" : ", reject\n";
    } else if (t.code == tc::kMnLlaIid) {
      out += fmt::format("lla_iid = {}\n", codec::decode_lla_iid(t.value).to_string());
    } else if (t.code == tc::kLmaAddress) {
      out += fmt::format("lmaa = {}\n", codec::decode_lma_address(t.value).to_string());
    } else if (t.code == tc::kHomeNetworkPrefix) {
      for (const auto& p : codec::decode_hnp_list(t.value)) {
        out += fmt::format("hnp = {}\n", p.to_string());
      }
    } else if (text_key != std::end(kTextTlvs) && printable(t.value)) {
      out += fmt::format("{} = {}\n", text_key->second,
                         std::string(t.value.begin(), t.value.end()));
    } else {
      auto name = reg.tlv_name(t.code);
      out += fmt::format("tlv.{} = {}", t.code, hex_compact(t.value));
      if (!name.empty()) out += fmt::format("  # {}", name);
      out += "\n";
    }
  }
  return out;
}

std::string encode_text_to_hex(std::string_view text) {
  auto hex = codec::to_hex(codec::encode_message(parse_message_text(text)));
  if (!hex.empty() && hex.back() != '\n') hex += '\n';
  return hex;
}

std::string decode_hex_to_text(std::string_view hex) {
  return format_message_text(codec::decode_message(codec::from_hex(hex)));
}

}  // namespace mihx::cli
