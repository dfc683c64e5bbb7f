#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mihx::codec {

using Bytes = std::vector<std::uint8_t>;

/// Two lowercase hex digits per octet, separated by single spaces, with a
/// line break every `per_line` octets (0 = one line).
std::string to_hex(std::span<const std::uint8_t> octets, std::size_t per_line = 16);

/// Parses whitespace-separated two-digit hex octets. Lines may carry `#`
/// comments. Throws CodecError(BadHex) with the octet index reached.
Bytes from_hex(std::string_view text);

}  // namespace mihx::codec
