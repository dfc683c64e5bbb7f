#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mihx/analytic/catalog.hpp"
#include "mihx/protocol/entity.hpp"
#include "mihx/protocol/schemes.hpp"
#include "mihx/sim/link.hpp"

namespace mihx::sim {

struct FieldError {
  std::string field;
  std::string message;
};

/// Invalid configuration; carries one diagnostic per offending field.
class ConfigInvalid : public std::runtime_error {
 public:
  explicit ConfigInvalid(std::vector<FieldError> errors);
  ConfigInvalid(std::string field, std::string message)
      : ConfigInvalid(std::vector<FieldError>{{std::move(field), std::move(message)}}) {}

  const std::vector<FieldError>& errors() const noexcept { return errors_; }

 private:
  std::vector<FieldError> errors_;
};

struct Scenario {
  protocol::Scheme scheme = protocol::Scheme::ProposedIntegrated;
  TimingMode mode = TimingMode::Deterministic;
  std::uint64_t seed = 1;
  Topology topology;
  WirelessLinkParams wireless;
  WiredLinkParams wired;
  double t_l2_ms = 45.35;
  double p_f = 0.5;
  double data_size = 1024;
  double cbr_interval_ms = 10;
  std::size_t buffer_capacity = 256;
  int n = 6;
  int m = 6;
  protocol::HandoverOptions handover;
  analytic::Catalog catalog = analytic::Catalog::table5();
  protocol::MnProfile profile;
  /// Value of the swept parameter, echoed into the metrics row.
  std::optional<double> sweep_value;

  std::vector<FieldError> check() const;
  /// Throws ConfigInvalid listing every problem found by check().
  void validate() const;
};

std::string_view to_string(TimingMode m);
/// "deterministic" or "sampled"; throws std::invalid_argument otherwise.
TimingMode parse_timing_mode(std::string_view text);

}  // namespace mihx::sim
