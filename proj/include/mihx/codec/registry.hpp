#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mihx::codec {

struct MessageKind {
  std::string name;
  std::uint8_t sid = 0;
  std::uint8_t opcode = 0;
  std::uint16_t aid = 0;
  std::vector<std::uint8_t> mandatory_tlvs;
  /// Abbreviation of the matching message-size catalog row, empty if none.
  std::string catalog_abbrev;
};

/// Bijective map between message kinds and (sid, opcode, aid), plus TLV
/// names. The built-in registry is compiled from data/mih_registry.txt.
class Registry {
 public:
  /// Throws std::invalid_argument on syntax errors or duplicate names/IDs.
  static Registry parse(std::string_view text);
  static const Registry& builtin();

  const MessageKind* find(std::string_view name) const;
  const MessageKind* find(std::uint8_t sid, std::uint8_t opcode, std::uint16_t aid) const;
  std::span<const MessageKind> kinds() const { return kinds_; }

  std::string_view tlv_name(std::uint8_t code) const;
  std::optional<std::uint8_t> tlv_code(std::string_view name) const;

 private:
  std::vector<MessageKind> kinds_;
  std::vector<std::pair<std::uint8_t, std::string>> tlv_names_;
};

}  // namespace mihx::codec
