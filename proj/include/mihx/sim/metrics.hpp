#pragma once

#include <span>
#include <string>

#include "mihx/sim/run.hpp"

namespace mihx::sim {

/// scheme,mode,seed,outcome,sweep_value,handover_delay_ms,packets_generated,
/// packets_lost,packets_duplicated_suppressed,signaling_wireless,
/// signaling_wired,transcript_length
std::string metrics_csv_header();
/// Missing optional values are written as empty fields.
std::string to_csv_row(const MetricsRecord& r);
std::string to_csv(std::span<const MetricsRecord> rows);

}  // namespace mihx::sim
