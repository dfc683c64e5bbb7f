#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mihx/cli/config.hpp"

namespace mihx::cli {

class UnknownFigure : public std::invalid_argument {
 public:
  explicit UnknownFigure(std::string_view id)
      : std::invalid_argument("unknown figure '" + std::string(id) +
                              "' (expected fig10 ... fig17)") {}
};

enum class FigureQuantity { HandoverDelayMs, HandoverRate, CostPerSecond };

struct FigureSpec {
  std::string id;
  SweepSpec axis;
  std::optional<SweepSpec> axis2;  // fig12 grid
  FigureQuantity quantity = FigureQuantity::HandoverDelayMs;
};

std::vector<std::string> figure_ids();
/// Throws UnknownFigure.
FigureSpec figure_spec(std::string_view id);

/// CSV with header `x[,x2],standard,fast,proposed`. A `sweep.<param>` in
/// the config replaces the default range of the matching axis; a sweep
/// over any other parameter is a ConfigInvalid.
std::string figure_csv(std::string_view id, const RunConfig& cfg);

}  // namespace mihx::cli
