#include "mihx/cli/figures.hpp"

#include <fmt/format.h>

#include "mihx/analytic/cost.hpp"
#include "mihx/analytic/delay.hpp"
#include "mihx/analytic/mobility.hpp"

namespace mihx::cli {

namespace {

SweepSpec range(const char* param, double start, double step, double stop) {
  return SweepSpec{param, start, step, stop};
}

constexpr analytic::Solution kColumns[] = {analytic::Solution::Standard, analytic::Solution::Fast,
                                           analytic::Solution::Proposed};

std::string row_values(const FigureSpec& spec, const RunConfig& c) {
  std::string out;
  for (auto s : kColumns) {
    double v = 0;
    switch (spec.quantity) {
      case FigureQuantity::HandoverDelayMs:
        v = analytic::handover_delay(s, c.delay, c.catalog());
        break;
      case FigureQuantity::HandoverRate:
        v = analytic::handover_rate(c.mobility);
        break;
      case FigureQuantity::CostPerSecond:
        v = analytic::total_cost(s, c.cost, c.mobility, c.catalog());
        break;
    }
    out += fmt::format(",{:.10g}", v);
  }
  return out;
}

}  // namespace

std::vector<std::string> figure_ids() {
  return {"fig10", "fig11", "fig12", "fig13", "fig14", "fig15", "fig16", "fig17"};
}

FigureSpec figure_spec(std::string_view id) {
  using Q = FigureQuantity;
  if (id == "fig10") return {"fig10", range("rho_f", 0, 0.05, 0.3), {}, Q::HandoverDelayMs};
  if (id == "fig11") return {"fig11", range("D_wl", 1, 1, 50), {}, Q::HandoverDelayMs};
  if (id == "fig12") return {"fig12", range("r", 50, 50, 500), range("d", 10, 10, 100), Q::HandoverRate};
  if (id == "fig13") return {"fig13", range("h_mag_mag", 1, 1, 20), {}, Q::CostPerSecond};
  if (id == "fig14") return {"fig14", range("p_f", 0.05, 0.05, 0.9), {}, Q::CostPerSecond};
  if (id == "fig15") return {"fig15", range("v_min", 1, 1, 36), {}, Q::CostPerSecond};
  if (id == "fig16") return {"fig16", range("r", 50, 50, 500), {}, Q::CostPerSecond};
  if (id == "fig17") return {"fig17", range("d", 10, 10, 100), {}, Q::CostPerSecond};
  throw UnknownFigure(id);
}

std::string figure_csv(std::string_view id, const RunConfig& cfg) {
  FigureSpec spec = figure_spec(id);
  if (cfg.sweep) {
    if (cfg.sweep->param == spec.axis.param) {
      spec.axis = *cfg.sweep;
    } else if (spec.axis2 && cfg.sweep->param == spec.axis2->param) {
      spec.axis2 = *cfg.sweep;
    } else {
      throw sim::ConfigInvalid("sweep." + cfg.sweep->param,
                               fmt::format("{} sweeps '{}'", spec.id, spec.axis.param));
    }
  }

  std::string out = spec.axis2 ? "x,x2,standard,fast,proposed\n" : "x,standard,fast,proposed\n";
  for (double x : spec.axis.values()) {
    const auto xs = format_number(x);
    RunConfig row = cfg;
    row.set(spec.axis.param, xs);
    if (!spec.axis2) {
      out += xs + row_values(spec, row) + "\n";
      continue;
    }
    for (double x2 : spec.axis2->values()) {
      const auto x2s = format_number(x2);
      RunConfig cell = row;
      cell.set(spec.axis2->param, x2s);
      out += xs + "," + x2s + row_values(spec, cell) + "\n";
    }
  }
  return out;
}

}  // namespace mihx::cli
