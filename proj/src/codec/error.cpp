#include "mihx/codec/error.hpp"

namespace mihx::codec {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::ValueTooLong: return "ValueTooLong";
    case Errc::Truncated: return "Truncated";
    case Errc::MalformedLength: return "MalformedLength";
    case Errc::UnknownMessageKind: return "UnknownMessageKind";
    case Errc::MissingMandatoryTlv: return "MissingMandatoryTlv";
    case Errc::InvalidTlvValue: return "InvalidTlvValue";
    case Errc::EmptyHnpList: return "EmptyHnpList";
    case Errc::FieldOutOfRange: return "FieldOutOfRange";
    case Errc::BadHex: return "BadHex";
  }
  return "Unknown";
}

CodecError::CodecError(Errc code, std::size_t offset, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + " at offset " +
                         std::to_string(offset) + ": " + detail),
      code_(code),
      offset_(offset) {}

}  // namespace mihx::codec
