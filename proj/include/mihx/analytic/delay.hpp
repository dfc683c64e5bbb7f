#pragma once

#include <cstdint>

#include "mihx/analytic/catalog.hpp"

namespace mihx::analytic {

/// Handover solutions covered by the closed-form analysis.
enum class Solution { Standard, Fast, Proposed };

const char* to_string(Solution s);

/// Link and timing parameters of the delay model. Times in ms, sizes in
/// octets, wired bandwidth in octets per second.
struct DelayParams {
  double tau_ms = 20.0;         ///< interframe time
  double rho_f = 0.1;           ///< frame error rate
  double frame_size = 100.0;    ///< L_f
  double d_wl_ms = 10.0;        ///< one-way wireless link delay
  int retx_limit = 10;          ///< summation bound n of the ARQ series
  double bw_wired = 12.5e6;     ///< octets/s (100 Mb/s)
  double d_wired_ms = 2.0;      ///< per-path wired latency
  double t_l2_ms = 45.35;       ///< link-layer handover delay
  double data_size = 1024.0;    ///< L_D
  int h_mag_lma = 10;

  /// Throws DomainError naming the offending field.
  void validate() const;
};

/// Extra octets on packets that were buffered at the target and delivered
/// through the mobility tunnel.
inline constexpr double kTunnelOverhead = 40.0;

/// Probability that a frame is delivered on retransmission round i at
/// sub-slot j (1 <= j <= i). Throws DomainError outside that range.
double p_ij(double rho_f, int i, int j);

/// Expected one-way frame delay including ARQ retransmissions.
double frame_delay(const DelayParams& p);

/// (1 - rho_f) + sum of p_ij over i <= n: the probability mass the series covers.
double delivery_mass(double rho_f, int n);

/// One-way wireless delay of an L_p-octet packet (ceil(L_p/L_f) frames).
double packet_delay_wl(double packet_size, const DelayParams& p);

/// One-way wired delay over `hops` hops. Throws DomainError for hops < 1
/// or a non-positive size.
double packet_delay_wd(double packet_size, int hops, const DelayParams& p);

/// Handover delay of each solution, using the catalog's RS/RA/PBU/PBA/UNA sizes.
double handover_delay(Solution s, const DelayParams& p,
                      const Catalog& catalog = Catalog::table5());

}  // namespace mihx::analytic
