#pragma once

namespace mihx::analytic {

/// City-section mobility: movement along a rectangular road grid in epochs
/// with uniform speed in [v_min, v_max] and uniform pause in [0, t_max].
/// Lengths in m, speeds in m/s, times in s.
struct MobilityParams {
  double a = 36000;      ///< section length
  double b = 24000;      ///< section width
  double d_x = 10;       ///< spacing between horizontal roads
  double d_y = 10;       ///< spacing between vertical roads
  double r = 100;        ///< cell radius
  double v_min = 1;
  double v_max = 50;
  double t_max = 70;     ///< maximum pause
  int m_mob = 6;         ///< the m of the crossing-count expressions

  void validate() const;
  int n_h() const;
  int n_v() const;
};

/// Expected distance travelled in one epoch.
double epoch_length(const MobilityParams& p);

struct Crossings {
  double x = 0;
  double y = 0;
  double total() const { return x + y; }
};

/// Expected number of subnet crossings per epoch.
Crossings expected_crossings(const MobilityParams& p);

/// Expected moving time of an epoch: E(L) * ln(v_max/v_min) / (v_max - v_min).
/// Throws DomainError when v_min == v_max.
double epoch_time(const MobilityParams& p);

/// Expected handovers per second: E(N_t) / (E(T_i) + 2 * 0.5 * t_max).
double handover_rate(const MobilityParams& p);

}  // namespace mihx::analytic
