#pragma once

#include <cstdint>
#include <string_view>

namespace mihx::codec {

/// Handover status carried by the extended N2N_HO_Commit response. Values
/// follow the IANA FMIPv6/PFMIPv6 status registry; everything not listed
/// there decodes as "Unassigned".
struct StatusCode {
  std::uint8_t value = 0;

  std::string_view meaning() const;
  /// Meaning under the base 802.21 status definition (0-4 only).
  std::string_view mih_meaning() const;
  /// "RFC5568", "RFC5949" or empty.
  std::string_view reference() const;
  bool assigned() const;
  /// 0-127 accept the handover; 128-255 reject it.
  bool accepted() const { return value < 128; }

  friend bool operator==(StatusCode, StatusCode) = default;
};

inline constexpr std::string_view kUnassigned = "Unassigned";

}  // namespace mihx::codec
