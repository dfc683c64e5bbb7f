#include "mihx/codec/hex.hpp"

#include <cctype>

#include "mihx/codec/error.hpp"

namespace mihx::codec {

namespace {

int nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> octets, std::size_t per_line) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(octets.size() * 3);
  for (std::size_t i = 0; i < octets.size(); ++i) {
    if (i != 0) out.push_back(per_line != 0 && i % per_line == 0 ? '\n' : ' ');
    out.push_back(kDigits[octets[i] >> 4]);
    out.push_back(kDigits[octets[i] & 0x0f]);
  }
  return out;
}

Bytes from_hex(std::string_view text) {
  Bytes out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (i + 1 >= text.size() || nibble(c) < 0 || nibble(text[i + 1]) < 0 ||
        (i + 2 < text.size() && !std::isspace(static_cast<unsigned char>(text[i + 2])) &&
         text[i + 2] != '#')) {
      throw CodecError(Errc::BadHex, out.size(),
                       "expected two hex digits, got '" +
                           std::string(text.substr(i, 3)) + "'");
    }
    out.push_back(static_cast<std::uint8_t>(nibble(c) << 4 | nibble(text[i + 1])));
    i += 2;
  }
  return out;
}

}  // namespace mihx::codec
