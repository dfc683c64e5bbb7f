#include "mihx/analytic/delay.hpp"

#include <cmath>
#include <string>

#include "mihx/analytic/errors.hpp"

namespace mihx::analytic {

const char* to_string(Solution s) {
  switch (s) {
    case Solution::Standard: return "standard";
    case Solution::Fast: return "fast";
    case Solution::Proposed: return "proposed";
  }
  return "?";
}

void DelayParams::validate() const {
  auto fail = [](const std::string& what) { throw DomainError("DelayParams: " + what); };
  if (!(tau_ms > 0)) fail("tau_ms must be > 0");
  if (!(rho_f >= 0 && rho_f < 1)) fail("rho_f must be in [0, 1)");
  if (!(frame_size > 0)) fail("frame_size must be > 0");
  if (!(d_wl_ms >= 0)) fail("d_wl_ms must be >= 0");
  if (retx_limit < 1) fail("retx_limit must be >= 1");
  if (!(bw_wired > 0)) fail("bw_wired must be > 0");
  if (!(d_wired_ms >= 0)) fail("d_wired_ms must be >= 0");
  if (!(t_l2_ms >= 0)) fail("t_l2_ms must be >= 0");
  if (!(data_size > 0)) fail("data_size must be > 0");
  if (h_mag_lma < 1) fail("h_mag_lma must be >= 1");
}

double p_ij(double rho_f, int i, int j) {
  if (i < 1 || j < 1 || j > i) {
    throw DomainError("p_ij needs 1 <= j <= i, got i=" + std::to_string(i) +
                      " j=" + std::to_string(j));
  }
  if (!(rho_f >= 0 && rho_f < 1)) throw DomainError("p_ij: rho_f must be in [0, 1)");
  const double exponent = (static_cast<double>(i) * i - i) / 2 + j - 1;
  return rho_f * (1 - rho_f) * (1 - rho_f) * std::pow((2 - rho_f) * rho_f, exponent);
}

double frame_delay(const DelayParams& p) {
  double d = p.d_wl_ms * (1 - p.rho_f);
  for (int i = 1; i <= p.retx_limit; ++i) {
    for (int j = 1; j <= i; ++j) {
      d += p_ij(p.rho_f, i, j) * (2.0 * i * p.d_wl_ms + 2.0 * (j - 1) * p.tau_ms);
    }
  }
  return d;
}

double delivery_mass(double rho_f, int n) {
  double mass = 1 - rho_f;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) mass += p_ij(rho_f, i, j);
  }
  return mass;
}

double packet_delay_wl(double packet_size, const DelayParams& p) {
  if (!(packet_size > 0)) throw DomainError("packet_delay_wl: size must be > 0");
  const double frames = std::ceil(packet_size / p.frame_size);
  return frame_delay(p) + (frames - 1) * p.tau_ms;
}

double packet_delay_wd(double packet_size, int hops, const DelayParams& p) {
  if (hops < 1) throw DomainError("packet_delay_wd: hops must be >= 1");
  if (!(packet_size > 0)) throw DomainError("packet_delay_wd: size must be > 0");
  return packet_size * hops / p.bw_wired * 1000.0 + p.d_wired_ms;
}

double handover_delay(Solution s, const DelayParams& p, const Catalog& catalog) {
  p.validate();
  auto wl = [&](std::string_view m) {
    return packet_delay_wl(static_cast<double>(catalog.size(m, 0, 0)), p);
  };
  auto wd = [&](std::string_view m) {
    return packet_delay_wd(static_cast<double>(catalog.size(m, 0, 0)), p.h_mag_lma, p);
  };
  switch (s) {
    case Solution::Standard:
      return wl("M_RS") + wl("M_RA") + wd("M_PBU") + wd("M_PBA") +
             packet_delay_wl(p.data_size, p) + p.t_l2_ms;
    case Solution::Fast:
      return p.t_l2_ms + wl("M_RS") + packet_delay_wl(p.data_size + kTunnelOverhead, p);
    case Solution::Proposed:
      return p.t_l2_ms + wl("M_UNA") + packet_delay_wl(p.data_size + kTunnelOverhead, p);
  }
  return 0;
}

}  // namespace mihx::analytic
