#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mihx::codec {

enum class Errc {
  ValueTooLong,
  Truncated,
  MalformedLength,
  UnknownMessageKind,
  MissingMandatoryTlv,
  InvalidTlvValue,
  EmptyHnpList,
  FieldOutOfRange,
  BadHex,
};

std::string_view to_string(Errc code);

/// Raised by every codec entry point. `offset` is the octet position in the
/// input being parsed (0 for errors that are not tied to an input position).
class CodecError : public std::runtime_error {
 public:
  CodecError(Errc code, std::size_t offset, const std::string& detail);

  Errc code() const noexcept { return code_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Errc code_;
  std::size_t offset_;
};

}  // namespace mihx::codec
