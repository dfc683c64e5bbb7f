#include "mihx/protocol/binding_cache.hpp"

namespace mihx::protocol {

const BindingCacheEntry* BindingCache::find(const std::string& mn_id) const {
  auto it = entries_.find(mn_id);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<EntityId> BindingCache::downlink_targets(const std::string& mn_id) const {
  const auto* e = find(mn_id);
  if (e == nullptr) return {};
  if (e->state == BindingState::TransientBicast) return {e->serving_mag, e->new_mag};
  return {e->serving_mag};
}

void BindingCache::bootstrap(const std::string& mn_id, std::vector<codec::Prefix> hnps,
                             EntityId mag) {
  entries_[mn_id] = BindingCacheEntry{mn_id, std::move(hnps), BindingState::Active, mag, mag, 3600};
}

ProxyBindingAck lma_process_pbu(BindingCache& cache, const ProxyBindingUpdate& pbu) {
  ProxyBindingAck ack{pbu.mn_id, pbu.mag, 0, false};
  auto it = cache.entries_.find(pbu.mn_id);

  if (pbu.dereg) {
    if (it == cache.entries_.end()) {
      throw ProtocolError(ProtocolErrc::DeregUnknownBinding,
                          "no binding for '" + pbu.mn_id + "'");
    }
    auto& e = it->second;
    if (e.state == BindingState::TransientBicast) {
      if (pbu.mag == e.serving_mag) {
        e.serving_mag = e.new_mag;
        e.state = BindingState::Active;
      } else if (pbu.mag == e.new_mag) {
        e.new_mag = e.serving_mag;
        e.state = BindingState::Active;
      } else {
        ack.ignored = true;
      }
    } else if (pbu.mag == e.serving_mag) {
      cache.entries_.erase(it);
    } else {
      ack.ignored = true;
    }
    return ack;
  }

  if (it == cache.entries_.end()) {
    cache.entries_[pbu.mn_id] =
        BindingCacheEntry{pbu.mn_id, pbu.hnps, BindingState::Active, pbu.mag, pbu.mag, pbu.lifetime_s};
    return ack;
  }

  auto& e = it->second;
  if (!pbu.hnps.empty()) e.hnps = pbu.hnps;
  e.lifetime_s = pbu.lifetime_s;
  if (pbu.transient && pbu.mag != e.serving_mag) {
    e.state = BindingState::TransientBicast;
    e.new_mag = pbu.mag;
  } else {
    e.state = BindingState::Active;
    e.serving_mag = pbu.mag;
    e.new_mag = pbu.mag;
  }
  return ack;
}

}  // namespace mihx::protocol
