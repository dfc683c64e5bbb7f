#include "mihx/sim/metrics.hpp"

#include <fmt/format.h>

namespace mihx::sim {

std::string metrics_csv_header() {
  return "scheme,mode,seed,outcome,sweep_value,handover_delay_ms,packets_generated,packets_lost,"
         "packets_duplicated_suppressed,signaling_wireless,signaling_wired,transcript_length";
}

std::string to_csv_row(const MetricsRecord& r) {
  auto opt = [](const std::optional<double>& v, const char* f) {
    return v ? fmt::format(fmt::runtime(f), *v) : std::string();
  };
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}", r.scheme, r.mode, r.seed, r.outcome,
                     opt(r.sweep_value, "{}"), opt(r.handover_delay_ms, "{:.6f}"),
                     r.packets_generated, r.packets_lost, r.packets_duplicated_suppressed,
                     r.signaling_wireless, r.signaling_wired, r.transcript_length);
}

std::string to_csv(std::span<const MetricsRecord> rows) {
  std::string out = metrics_csv_header() + "\n";
  for (const auto& r : rows) out += to_csv_row(r) + "\n";
  return out;
}

}  // namespace mihx::sim
