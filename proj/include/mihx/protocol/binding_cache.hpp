#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mihx/codec/values.hpp"
#include "mihx/protocol/entity.hpp"

namespace mihx::protocol {

enum class BindingState { Active, TransientBicast };

/// LMA binding cache entry. While transient, downlink traffic is bicast to
/// `serving_mag` and `new_mag`.
struct BindingCacheEntry {
  std::string mn_id;
  std::vector<codec::Prefix> hnps;
  BindingState state = BindingState::Active;
  EntityId serving_mag;
  EntityId new_mag;  // meaningful only while TransientBicast
  double lifetime_s = 3600;
};

struct ProxyBindingUpdate {
  std::string mn_id;
  EntityId mag;
  bool transient = false;  // 'T' flag
  bool dereg = false;      // lifetime 0
  std::vector<codec::Prefix> hnps;
  double lifetime_s = 3600;
};

struct ProxyBindingAck {
  std::string mn_id;
  EntityId mag;
  std::uint8_t status = 0;
  bool ignored = false;  // dereg from a MAG that no longer serves the MN
};

class BindingCache {
 public:
  const BindingCacheEntry* find(const std::string& mn_id) const;
  std::size_t size() const { return entries_.size(); }

  /// MAGs that receive the MN's downlink: one when Active, two while bicasting.
  std::vector<EntityId> downlink_targets(const std::string& mn_id) const;

  /// Creates an Active binding without signaling (initial attachment).
  void bootstrap(const std::string& mn_id, std::vector<codec::Prefix> hnps, EntityId mag);

  friend ProxyBindingAck lma_process_pbu(BindingCache& cache, const ProxyBindingUpdate& pbu);

 private:
  std::map<std::string, BindingCacheEntry> entries_;
};

/// LMA handling of a PBU:
///  - transient PBU from a new MAG: TransientBicast(serving, new)
///  - plain PBU: Active at the sender (ends any bicast)
///  - dereg from the serving MAG: entry removed
///  - dereg from a MAG that does not serve the MN: ignored
///  - dereg from one leg of a bicast: collapses to the other leg
/// A dereg for an unknown MN throws ProtocolError(DeregUnknownBinding).
ProxyBindingAck lma_process_pbu(BindingCache& cache, const ProxyBindingUpdate& pbu);

}  // namespace mihx::protocol
