#include "mihx/sim/link.hpp"

#include <algorithm>
#include <cmath>

namespace mihx::sim {

analytic::DelayParams to_delay_params(const WirelessLinkParams& wl, const WiredLinkParams& wd,
                                      double t_l2_ms, double data_size, int h_mag_lma) {
  analytic::DelayParams p;
  p.tau_ms = wl.tau_ms;
  p.rho_f = wl.rho_f;
  p.frame_size = wl.frame_size;
  p.d_wl_ms = wl.d_wl_ms;
  p.retx_limit = wl.retx_limit;
  p.bw_wired = wd.bw_wired;
  p.d_wired_ms = wd.d_wired_ms;
  p.t_l2_ms = t_l2_ms;
  p.data_size = data_size;
  p.h_mag_lma = h_mag_lma;
  return p;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

FrameDelaySampler::FrameDelaySampler(const WirelessLinkParams& p) {
  std::vector<double> mass;
  mass.push_back(1 - p.rho_f);
  delay_.push_back(p.d_wl_ms);
  if (p.rho_f > 0) {
    for (int i = 1; i <= p.retx_limit; ++i) {
      for (int j = 1; j <= i; ++j) {
        mass.push_back(analytic::p_ij(p.rho_f, i, j));
        delay_.push_back(2.0 * i * p.d_wl_ms + 2.0 * (j - 1) * p.tau_ms);
      }
    }
  }
  double total = 0;
  for (double m : mass) total += m;
  double acc = 0;
  for (double m : mass) {
    acc += m / total;
    cdf_.push_back(acc);
  }
  cdf_.back() = 1.0;
}

double FrameDelaySampler::sample(std::mt19937_64& rng) const {
  const double u = uniform01(rng);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return delay_[static_cast<std::size_t>(it - cdf_.begin())];
}

double FrameDelaySampler::mean() const {
  double m = 0;
  double prev = 0;
  for (std::size_t k = 0; k < cdf_.size(); ++k) {
    m += (cdf_[k] - prev) * delay_[k];
    prev = cdf_[k];
  }
  return m;
}

double sample_frame_delay(const WirelessLinkParams& p, std::mt19937_64& rng) {
  return FrameDelaySampler(p).sample(rng);
}

LinkTiming::LinkTiming(TimingMode mode, const WirelessLinkParams& wl, const WiredLinkParams& wd,
                       double p_f, std::uint64_t seed)
    : mode_(mode),
      wl_(wl),
      wd_(wd),
      dp_(to_delay_params(wl, wd, 0, 1, 1)),
      p_f_(p_f),
      expected_frame_(analytic::frame_delay(dp_)),
      sampler_(wl),
      rng_(seed) {}

WirelessDelay LinkTiming::wireless(double size, bool signaling) {
  const double extra_frames = std::ceil(size / wl_.frame_size) - 1;
  if (mode_ == TimingMode::Deterministic) {
    return {expected_frame_ + extra_frames * wl_.tau_ms, 0};
  }
  WirelessDelay out;
  while (true) {
    const double attempt = sampler_.sample(rng_) + extra_frames * wl_.tau_ms;
    if (signaling && uniform01(rng_) < p_f_) {
      out.delay_ms += attempt + wl_.tau_ms;
      ++out.retransmissions;
      continue;
    }
    out.delay_ms += attempt;
    return out;
  }
}

double LinkTiming::wired(double size, int hops) const {
  return analytic::packet_delay_wd(std::max(size, 1.0), hops, dp_);
}

}  // namespace mihx::sim
