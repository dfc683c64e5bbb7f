#include "mihx/protocol/entity.hpp"

#include <charconv>

namespace mihx::protocol {

namespace {

constexpr std::pair<Role, std::string_view> kRoleNames[] = {
    {Role::MN, "MN"},     {Role::PoA, "AP"},   {Role::MAG, "MAG"},
    {Role::LMA, "LMA"},   {Role::MIIS, "MIIS"}, {Role::CN, "CN"},
};

constexpr std::pair<Scheme, std::string_view> kSchemeNames[] = {
    {Scheme::StandardMobileInit, "standard-mobile"},
    {Scheme::StandardNetworkInit, "standard-network"},
    {Scheme::FpmipPredictive, "fpmip-predictive"},
    {Scheme::FpmipReactive, "fpmip-reactive"},
    {Scheme::FastHandoverMih, "fast-mih"},
    {Scheme::ProposedIntegrated, "proposed"},
};

}  // namespace

std::string EntityId::name() const {
  for (const auto& [r, n] : kRoleNames) {
    if (r == role) return std::string(n) + std::to_string(index);
  }
  return "?" + std::to_string(index);
}

EntityId EntityId::parse(std::string_view text) {
  for (const auto& [r, n] : kRoleNames) {
    if (text.starts_with(n) && text.size() > n.size()) {
      // "MAG2" must not match the "MN" prefix of something else; digits only after the role.
      int idx = 0;
      const auto digits = text.substr(n.size());
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
      if (ec == std::errc() && p == digits.data() + digits.size()) return EntityId{r, idx};
    }
  }
  throw std::invalid_argument("not an entity id: '" + std::string(text) + "'");
}

void MnProfile::validate() const {
  if (hnps.empty()) throw std::invalid_argument("MnProfile: hnps must not be empty");
  if (mn_id.empty()) throw std::invalid_argument("MnProfile: mn_id must not be empty");
}

std::string_view to_string(Scheme s) {
  for (const auto& [k, n] : kSchemeNames) {
    if (k == s) return n;
  }
  return "?";
}

Scheme parse_scheme(std::string_view text) {
  for (const auto& [k, n] : kSchemeNames) {
    if (n == text) return k;
  }
  throw std::invalid_argument("unknown scheme '" + std::string(text) + "'");
}

std::string HandoverContext::flag_string() const {
  std::string s;
  if (has(kFlagP)) s += 'P';
  if (has(kFlagF)) s += 'F';
  if (has(kFlagU)) s += 'U';
  return s.empty() ? "-" : s;
}

HandoverContext HandoverContext::from_profile(const MnProfile& p, std::uint8_t flags) {
  return HandoverContext{p.mn_id, p.lla_iid, p.lmaa, p.hnps, flags};
}

std::string_view to_string(ProtocolErrc e) {
  switch (e) {
    case ProtocolErrc::HandoverReject: return "HandoverReject";
    case ProtocolErrc::UnknownPreviousMag: return "UnknownPreviousMag";
    case ProtocolErrc::NoCandidate: return "NoCandidate";
    case ProtocolErrc::CommitRejected: return "CommitRejected";
    case ProtocolErrc::DeregUnknownBinding: return "DeregUnknownBinding";
  }
  return "?";
}

}  // namespace mihx::protocol
