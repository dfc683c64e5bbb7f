#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mihx/codec/values.hpp"

namespace mihx::protocol {

enum class Role { MN, PoA, MAG, LMA, MIIS, CN };

struct EntityId {
  Role role = Role::MN;
  int index = 1;

  std::string name() const;
  /// "MAG2" -> {MAG, 2}. Throws std::invalid_argument.
  static EntityId parse(std::string_view text);

  friend auto operator<=>(const EntityId&, const EntityId&) = default;
};

enum class AccessTech { Wlan, Wimax, Lte };

struct MnProfile {
  std::string mn_id = "mn1@example.net";
  codec::LinkAddress ll_id = codec::LinkAddress::mac48(std::array<std::uint8_t, 6>{0x02, 0x00, 0x5e, 0x10, 0x00, 0x01});
  codec::LinkAddress lla_iid = codec::LinkAddress::interface_id(0x00005efffe100001ULL);
  std::vector<codec::Prefix> hnps = {codec::Prefix::parse("2001:db8:1::/64")};
  codec::IpAddress lmaa = codec::IpAddress::parse("2001:db8::1");
  AccessTech if_s = AccessTech::Wlan;
  AccessTech if_c = AccessTech::Lte;

  void validate() const;
};

enum class Scheme {
  StandardMobileInit,
  StandardNetworkInit,
  FpmipPredictive,
  FpmipReactive,
  FastHandoverMih,
  ProposedIntegrated,
};

inline constexpr Scheme kAllSchemes[] = {
    Scheme::StandardMobileInit, Scheme::StandardNetworkInit, Scheme::FpmipPredictive,
    Scheme::FpmipReactive,      Scheme::FastHandoverMih,     Scheme::ProposedIntegrated,
};

std::string_view to_string(Scheme s);
/// Accepts the names produced by to_string. Throws std::invalid_argument.
Scheme parse_scheme(std::string_view text);

/// HI/HAck flags: P (predictive), F (forward), U (buffer).
enum HandoverFlag : std::uint8_t { kFlagP = 1, kFlagF = 2, kFlagU = 4 };

/// MN context moved between MAGs in HI/HAck.
struct HandoverContext {
  std::string mn_id;
  codec::LinkAddress lla_iid;
  codec::IpAddress lmaa;
  std::vector<codec::Prefix> hnps;
  std::uint8_t flags = 0;

  bool has(HandoverFlag f) const { return (flags & f) != 0; }
  std::string flag_string() const;
  static HandoverContext from_profile(const MnProfile& p, std::uint8_t flags);
};

enum class ProtocolErrc {
  HandoverReject,
  UnknownPreviousMag,
  NoCandidate,
  CommitRejected,
  DeregUnknownBinding,
};

std::string_view to_string(ProtocolErrc e);

class ProtocolError : public std::runtime_error {
 public:
  ProtocolError(ProtocolErrc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}
  ProtocolErrc code() const noexcept { return code_; }

 private:
  ProtocolErrc code_;
};

}  // namespace mihx::protocol
