#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mihx/analytic/catalog.hpp"
#include "mihx/analytic/cost.hpp"
#include "mihx/analytic/delay.hpp"
#include "mihx/analytic/mobility.hpp"
#include "mihx/sim/scenario.hpp"

namespace mihx::cli {

/// `start:step:stop`, inclusive of stop (within rounding).
struct SweepSpec {
  std::string param;
  double start = 0;
  double step = 1;
  double stop = 0;

  std::vector<double> values() const;
  /// Throws sim::ConfigInvalid naming `param`.
  static SweepSpec parse(std::string param, std::string_view text);
};

/// Parsed `key = value` configuration. Every key has a default; a key that
/// appears in several parameter groups (e.g. h_mag_lma) is set everywhere.
struct RunConfig {
  analytic::DelayParams delay;
  analytic::CostParams cost;
  analytic::MobilityParams mobility;
  sim::Scenario scenario;
  std::map<std::string, std::int64_t> size_overrides;
  std::optional<SweepSpec> sweep;

  /// Applies one key. Throws sim::ConfigInvalid for unknown keys or bad values.
  void set(std::string_view key, std::string_view value);

  /// Table 5 with `size.*` overrides applied.
  analytic::Catalog catalog() const;
  /// Scenario with the shared link, topology and size settings filled in.
  sim::Scenario make_scenario() const;

  static RunConfig parse(std::string_view text, std::string_view source = "config");
  /// Throws sim::ConfigInvalid (field "config") when the file cannot be read.
  static RunConfig load(const std::string& path);

 private:
  bool hnp_from_config_ = false;
};

/// Every accepted key (without the `size.` and `sweep.` families), sorted.
std::vector<std::string> config_keys();

/// Shortest decimal that round-trips, used for sweep values.
std::string format_number(double v);

}  // namespace mihx::cli
