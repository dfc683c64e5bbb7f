#include "mihx/sim/tally.hpp"

namespace mihx::sim {

SignalingTally signaling_tally(const protocol::Transcript& transcript, const Topology& topology,
                               analytic::Rational wired_unit, analytic::Rational wireless_unit) {
  using protocol::LinkKind;
  SignalingTally t;
  for (const auto& e : transcript.events()) {
    if (e.kind == "DATA") continue;
    switch (e.link) {
      case LinkKind::Air: t.groups.air += e.size; break;
      case LinkKind::MagMag: t.groups.mag_mag += e.size; break;
      case LinkKind::MagLma: t.groups.mag_lma += e.size; break;
      case LinkKind::MagMiis: t.groups.mag_miis += e.size; break;
      case LinkKind::Local: break;
    }
  }
  t.wireless_octet_hops = t.groups.air * topology.h_mn_mag;
  t.wired_octet_hops = t.groups.mag_mag * topology.h_mag_mag +
                       t.groups.mag_lma * topology.h_mag_lma +
                       t.groups.mag_miis * topology.h_mag_miis;
  t.wireless_cost = wireless_unit * analytic::Rational(t.wireless_octet_hops);
  t.wired_cost = wired_unit * analytic::Rational(t.wired_octet_hops);
  return t;
}

}  // namespace mihx::sim
