#pragma once

#include <span>
#include <vector>

#include "mihx/sim/run.hpp"
#include "mihx/sim/scenario.hpp"

namespace mihx::sim {

/// One metrics row per scenario, in input order. Every scenario is
/// validated first; all problems are reported together in one
/// ConfigInvalid whose fields are prefixed "scenario[i].". `threads` of 0
/// uses the hardware concurrency; 1 runs serially.
std::vector<MetricsRecord> collect_sweep(std::span<const Scenario> scenarios,
                                         unsigned threads = 1);

}  // namespace mihx::sim
