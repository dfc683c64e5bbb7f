#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mihx/analytic/delay.hpp"

namespace mihx::sim {

struct WirelessLinkParams {
  double tau_ms = 20.0;
  double rho_f = 0.1;
  double frame_size = 100.0;
  double d_wl_ms = 10.0;
  int retx_limit = 10;
};

struct WiredLinkParams {
  double bw_wired = 12.5e6;  ///< octets/s
  double d_wired_ms = 2.0;
};

struct Topology {
  int h_mn_mag = 1;
  int h_mag_lma = 10;
  int h_mag_mag = 10;
  int h_mag_miis = 10;
};

enum class TimingMode { Deterministic, Sampled };

analytic::DelayParams to_delay_params(const WirelessLinkParams& wl, const WiredLinkParams& wd,
                                      double t_l2_ms, double data_size, int h_mag_lma);

/// Inverse-CDF sampler over the ARQ delivery outcomes: direct success with
/// probability 1-rho_f, otherwise round (i, j) with probability p_ij,
/// renormalized over i <= retx_limit.
class FrameDelaySampler {
 public:
  explicit FrameDelaySampler(const WirelessLinkParams& p);

  double sample(std::mt19937_64& rng) const;
  /// Expectation of the (renormalized) distribution.
  double mean() const;

 private:
  std::vector<double> cdf_;
  std::vector<double> delay_;
};

double sample_frame_delay(const WirelessLinkParams& p, std::mt19937_64& rng);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(std::mt19937_64& rng);

struct WirelessDelay {
  double delay_ms = 0;
  int retransmissions = 0;
};

/// Link delays for one scenario. Deterministic mode uses the expected
/// delays of the analytic model; sampled mode draws ARQ outcomes per frame
/// and, for signaling, whole-message Bernoulli(p_f) failures that are
/// retried after one interframe time.
class LinkTiming {
 public:
  LinkTiming(TimingMode mode, const WirelessLinkParams& wl, const WiredLinkParams& wd,
             double p_f, std::uint64_t seed);

  WirelessDelay wireless(double size, bool signaling);
  double wired(double size, int hops) const;

  TimingMode mode() const { return mode_; }
  const WirelessLinkParams& wireless_params() const { return wl_; }

 private:
  TimingMode mode_;
  WirelessLinkParams wl_;
  WiredLinkParams wd_;
  analytic::DelayParams dp_;
  double p_f_;
  double expected_frame_;
  FrameDelaySampler sampler_;
  std::mt19937_64 rng_;
};

}  // namespace mihx::sim
