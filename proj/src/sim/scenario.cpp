#include "mihx/sim/scenario.hpp"

#include <cmath>

namespace mihx::sim {

namespace {

std::string join(const std::vector<FieldError>& errors) {
  std::string s = "invalid configuration:";
  for (const auto& e : errors) s += " " + e.field + ": " + e.message + ";";
  if (!errors.empty()) s.pop_back();
  return s;
}

}  // namespace

ConfigInvalid::ConfigInvalid(std::vector<FieldError> errors)
    : std::runtime_error(join(errors)), errors_(std::move(errors)) {}

std::vector<FieldError> Scenario::check() const {
  std::vector<FieldError> out;
  auto need = [&](bool ok, const char* field, const char* msg) {
    if (!ok) out.push_back({field, msg});
  };
  auto finite = [](double v) { return std::isfinite(v); };
  need(finite(wireless.tau_ms) && wireless.tau_ms > 0, "tau", "must be > 0");
  need(finite(wireless.rho_f) && wireless.rho_f >= 0 && wireless.rho_f < 1, "rho_f",
       "must lie in [0, 1)");
  need(finite(wireless.frame_size) && wireless.frame_size > 0, "L_f", "must be > 0");
  need(finite(wireless.d_wl_ms) && wireless.d_wl_ms >= 0, "D_wl", "must be >= 0");
  need(wireless.retx_limit >= 1, "retx_limit", "must be >= 1");
  need(finite(wired.bw_wired) && wired.bw_wired > 0, "bw_wired", "must be > 0");
  need(finite(wired.d_wired_ms) && wired.d_wired_ms >= 0, "D_wired", "must be >= 0");
  need(topology.h_mn_mag >= 1, "h_mn_mag", "must be >= 1");
  need(topology.h_mag_lma >= 1, "h_mag_lma", "must be >= 1");
  need(topology.h_mag_mag >= 1, "h_mag_mag", "must be >= 1");
  need(topology.h_mag_miis >= 1, "h_mag_miis", "must be >= 1");
  need(finite(t_l2_ms) && t_l2_ms >= 0, "t_l2", "must be >= 0");
  need(finite(p_f) && p_f >= 0 && p_f < 1, "p_f", "must lie in [0, 1)");
  need(finite(data_size) && data_size > 0, "L_D", "must be > 0");
  need(finite(cbr_interval_ms) && cbr_interval_ms > 0, "cbr_interval", "must be > 0");
  need(buffer_capacity >= 1, "buffer_capacity", "must be >= 1");
  need(n >= 0, "n", "must be >= 0");
  need(m >= 0, "m", "must be >= 0");
  need(finite(handover.trigger_ms) && handover.trigger_ms >= 0, "trigger", "must be >= 0");
  need(profile.hnps.size() >= 1, "hnp", "at least one home network prefix required");
  need(!profile.mn_id.empty(), "mn_id", "must not be empty");
  return out;
}

void Scenario::validate() const {
  auto errors = check();
  if (!errors.empty()) throw ConfigInvalid(std::move(errors));
}

std::string_view to_string(TimingMode m) {
  return m == TimingMode::Deterministic ? "deterministic" : "sampled";
}

TimingMode parse_timing_mode(std::string_view text) {
  if (text == "deterministic") return TimingMode::Deterministic;
  if (text == "sampled") return TimingMode::Sampled;
  throw std::invalid_argument("mode must be 'deterministic' or 'sampled'");
}

}  // namespace mihx::sim
