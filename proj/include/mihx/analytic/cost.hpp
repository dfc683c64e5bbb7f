#pragma once

#include <cstdint>

#include "mihx/analytic/catalog.hpp"
#include "mihx/analytic/delay.hpp"
#include "mihx/analytic/mobility.hpp"
#include "mihx/analytic/rational.hpp"

namespace mihx::analytic {

/// Wireless retransmission weighting: `Odds` uses P_f/(1-P_f),
/// `ExpectedTransmissions` uses 1/(1-P_f).
enum class RetxFactor { Odds, ExpectedTransmissions };

struct CostParams {
  Rational p_f{1, 2};            ///< wireless link failure probability
  Rational wired_unit{1};        ///< A
  Rational wireless_unit{3, 2};  ///< B
  int h_mn_mag = 1;
  int h_mag_lma = 10;
  int h_mag_mag = 10;
  int h_mag_miis = 10;
  int n = 6;  ///< neighboring networks
  int m = 6;  ///< preferred PoAs
  RetxFactor retx = RetxFactor::Odds;

  void validate() const;
  Rational retx_factor() const;
};

/// Octet sums per path group of one handover, multipliers included
/// (e.g. m*(M_7+M_8), 3*(PBU+PBA)).
struct SignalingTerms {
  std::int64_t air = 0;
  std::int64_t mag_mag = 0;
  std::int64_t mag_miis = 0;
  std::int64_t mag_lma = 0;

  std::int64_t air_octet_hops(const CostParams& c) const { return air * c.h_mn_mag; }
  std::int64_t wired_octet_hops(const CostParams& c) const {
    return mag_mag * c.h_mag_mag + mag_miis * c.h_mag_miis + mag_lma * c.h_mag_lma;
  }

  friend bool operator==(const SignalingTerms&, const SignalingTerms&) = default;
};

SignalingTerms signaling_terms(Solution s, const CostParams& c,
                               const Catalog& catalog = Catalog::table5());

struct HandoverCost {
  Rational wireless;
  Rational wired;
  Rational total() const { return wireless + wired; }
};

/// Per-handover signaling cost: B * factor * H_MN_MAG * air + A * wired octet-hops.
HandoverCost per_handover_cost(Solution s, const CostParams& c,
                               const Catalog& catalog = Catalog::table5());

/// Signaling cost per second: handover rate times the per-handover cost.
double total_cost(Solution s, const CostParams& c, const MobilityParams& mob,
                  const Catalog& catalog = Catalog::table5());

}  // namespace mihx::analytic
