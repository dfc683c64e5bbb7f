#include "mihx/analytic/mobility.hpp"

#include <cmath>

#include "mihx/analytic/errors.hpp"

namespace mihx::analytic {

void MobilityParams::validate() const {
  if (!(d_x > 0 && a >= d_x)) throw DomainError("mobility: need a >= d_x > 0");
  if (!(d_y > 0 && b >= d_y)) throw DomainError("mobility: need b >= d_y > 0");
  if (!(r > 0)) throw DomainError("mobility: need r > 0");
  if (!(v_min > 0 && v_max > v_min)) throw DomainError("mobility: need 0 < v_min < v_max");
  if (!(t_max >= 0)) throw DomainError("mobility: need t_max >= 0");
  if (m_mob < 0) throw DomainError("mobility: need m_mob >= 0");
}

int MobilityParams::n_h() const { return static_cast<int>(std::ceil(a / d_x)); }
int MobilityParams::n_v() const { return static_cast<int>(std::ceil(b / d_y)); }

double epoch_length(const MobilityParams& p) {
  const double nh = p.n_h();
  const double nv = p.n_v();
  return p.d_x * (nh + 1) * (nh - 1) / (3 * nh) + p.d_y * (nv + 1) * (nv - 1) / (3 * nv);
}

namespace {

double crossings_1d(int m, double k, double n) {
  return m * (m + 1.0) * k / (6 * n * n) * (6 * n - 4 * m * k + k + 3);
}

}  // namespace

Crossings expected_crossings(const MobilityParams& p) {
  const double k1 = 2 * p.r / p.d_x;
  const double k2 = 2 * p.r / p.d_y;
  return {crossings_1d(p.m_mob, k1, p.n_h()), crossings_1d(p.m_mob, k2, p.n_v())};
}

double epoch_time(const MobilityParams& p) {
  if (p.v_min == p.v_max) throw DomainError("epoch_time: v_min equals v_max");
  if (!(p.v_min > 0 && p.v_max > 0)) throw DomainError("epoch_time: speeds must be positive");
  return epoch_length(p) * std::log(std::fabs(p.v_max / p.v_min)) / (p.v_max - p.v_min);
}

double handover_rate(const MobilityParams& p) {
  p.validate();
  const double pause = 0.5 * p.t_max;
  return expected_crossings(p).total() / (epoch_time(p) + 2 * pause);
}

}  // namespace mihx::analytic
