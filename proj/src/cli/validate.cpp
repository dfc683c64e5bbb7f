#include "mihx/cli/validate.hpp"

#include <fmt/format.h>

#include <cmath>

#include "mihx/analytic/cost.hpp"
#include "mihx/analytic/delay.hpp"
#include "mihx/sim/run.hpp"
#include "mihx/sim/tally.hpp"

namespace mihx::cli {

namespace {

std::string groups(const analytic::SignalingTerms& t) {
  return fmt::format("air:{}/mag-mag:{}/mag-lma:{}/mag-miis:{}", t.air, t.mag_mag, t.mag_lma,
                     t.mag_miis);
}

}  // namespace

bool ValidationReport::ok() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

std::string ValidationReport::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += fmt::format("{} {} {} sim={} analytic={}\n", c.pass ? "PASS" : "FAIL", c.scheme,
                       c.quantity, c.simulated, c.analytic);
  }
  return out;
}

ValidationReport run_validation(const RunConfig& cfg) {
  using protocol::Scheme;
  using analytic::Solution;
  const std::pair<Scheme, Solution> pairs[] = {
      {Scheme::StandardMobileInit, Solution::Standard},
      {Scheme::StandardNetworkInit, Solution::Standard},
      {Scheme::FastHandoverMih, Solution::Fast},
      {Scheme::ProposedIntegrated, Solution::Proposed},
  };
  const auto& stock = analytic::Catalog::table5();

  ValidationReport report;
  for (const auto& [scheme, solution] : pairs) {
    sim::Scenario s = cfg.make_scenario();
    s.scheme = scheme;
    s.mode = sim::TimingMode::Deterministic;
    s.sweep_value.reset();
    const auto out = sim::run_scenario(s);
    const std::string name(protocol::to_string(scheme));

    const double want = analytic::handover_delay(solution, cfg.delay, stock);
    const auto got = out.metrics.handover_delay_ms;
    report.checks.push_back(ValidationCheck{
        name, "delay", got && std::abs(*got - want) <= kDelayTolerance,
        got ? fmt::format("{:.6f}", *got) : std::string("none (") + out.metrics.outcome + ")",
        fmt::format("{:.6f}", want)});

    const auto tally = sim::signaling_tally(out.transcript, s.topology);
    const auto terms = analytic::signaling_terms(solution, cfg.cost, stock);
    report.checks.push_back(
        ValidationCheck{name, "tally", tally.groups == terms, groups(tally.groups), groups(terms)});
  }
  return report;
}

}  // namespace mihx::cli
