#include "mihx/codec/registry.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace mihx::codec {

namespace detail {
extern const std::string_view kRegistryText;
}

namespace {

unsigned to_uint(const std::string& s, unsigned max, int line) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v > max) {
    throw std::invalid_argument("registry line " + std::to_string(line) + ": bad number '" +
                                s + "'");
  }
  return v;
}

}  // namespace

Registry Registry::parse(std::string_view text) {
  Registry r;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream line(raw);
    std::string tag;
    if (!(line >> tag)) continue;
    if (tag == "tlv") {
      std::string code, name;
      if (!(line >> code >> name)) {
        throw std::invalid_argument("registry line " + std::to_string(line_no) +
                                    ": expected 'tlv <code> <name>'");
      }
      r.tlv_names_.emplace_back(static_cast<std::uint8_t>(to_uint(code, 255, line_no)), name);
    } else if (tag == "kind") {
      std::string name, sid, op, aid, mandatory, abbrev;
      if (!(line >> name >> sid >> op >> aid >> mandatory >> abbrev)) {
        throw std::invalid_argument("registry line " + std::to_string(line_no) +
                                    ": expected 6 fields after 'kind'");
      }
      MessageKind k;
      k.name = name;
      k.sid = static_cast<std::uint8_t>(to_uint(sid, 15, line_no));
      k.opcode = static_cast<std::uint8_t>(to_uint(op, 3, line_no));
      k.aid = static_cast<std::uint16_t>(to_uint(aid, 1023, line_no));
      if (mandatory != "-") {
        std::istringstream codes(mandatory);
        std::string c;
        while (std::getline(codes, c, ',')) {
          k.mandatory_tlvs.push_back(static_cast<std::uint8_t>(to_uint(c, 255, line_no)));
        }
      }
      if (abbrev != "-") k.catalog_abbrev = abbrev;
      if (r.find(k.name) || r.find(k.sid, k.opcode, k.aid)) {
        throw std::invalid_argument("registry line " + std::to_string(line_no) +
                                    ": duplicate kind or message ID for " + k.name);
      }
      r.kinds_.push_back(std::move(k));
    } else {
      throw std::invalid_argument("registry line " + std::to_string(line_no) +
                                  ": unknown tag '" + tag + "'");
    }
  }
  return r;
}

const Registry& Registry::builtin() {
  static const Registry r = parse(detail::kRegistryText);
  return r;
}

const MessageKind* Registry::find(std::string_view name) const {
  for (const auto& k : kinds_) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

const MessageKind* Registry::find(std::uint8_t sid, std::uint8_t opcode,
                                  std::uint16_t aid) const {
  for (const auto& k : kinds_) {
    if (k.sid == sid && k.opcode == opcode && k.aid == aid) return &k;
  }
  return nullptr;
}

std::string_view Registry::tlv_name(std::uint8_t code) const {
  for (const auto& [c, n] : tlv_names_) {
    if (c == code) return n;
  }
  return {};
}

std::optional<std::uint8_t> Registry::tlv_code(std::string_view name) const {
  for (const auto& [c, n] : tlv_names_) {
    if (n == name) return c;
  }
  return std::nullopt;
}

}  // namespace mihx::codec
