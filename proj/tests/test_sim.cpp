#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mihx/analytic/cost.hpp"
#include "mihx/analytic/delay.hpp"
#include "mihx/sim/event_queue.hpp"
#include "mihx/sim/link.hpp"
#include "mihx/sim/metrics.hpp"
#include "mihx/sim/run.hpp"
#include "mihx/sim/scenario.hpp"
#include "mihx/sim/sweep.hpp"
#include "mihx/sim/tally.hpp"

using namespace mihx;
using namespace mihx::sim;
using protocol::Scheme;

namespace {

Scenario scenario(Scheme s, TimingMode mode = TimingMode::Deterministic, std::uint64_t seed = 1) {
  Scenario sc;
  sc.scheme = s;
  sc.mode = mode;
  sc.seed = seed;
  return sc;
}

bool has_field(const ConfigInvalid& e, std::string_view field) {
  for (const auto& f : e.errors())
    if (f.field == field) return true;
  return false;
}

}  // namespace

TEST_CASE("event queue ordering") {
  EventQueue q;
  std::vector<int> order;
  q.schedule_at(5, [&] { order.push_back(2); });
  q.schedule_at(1, [&] { order.push_back(1); });
  q.schedule_at(5, [&] { order.push_back(3); });
  q.schedule_at(3, [&] {
    q.schedule_in(0, [&] { order.push_back(10); });
  });
  q.run();
  CHECK(order == std::vector<int>{1, 10, 2, 3});
  CHECK(q.now() == 5);
  CHECK(q.executed() == 5);
  CHECK_THROWS_AS(q.schedule_at(4, [] {}), std::logic_error);
}

TEST_CASE("event queue runs up to a bound") {
  EventQueue q;
  int fired = 0;
  q.schedule_at(1, [&] { ++fired; });
  q.schedule_at(10, [&] { ++fired; });
  q.run(5);
  CHECK(fired == 1);
  CHECK(q.pending() == 1);
}

TEST_CASE("tally of hand-built transcripts") {
  const Topology topo;
  protocol::Transcript t;
  CHECK(signaling_tally(t, topo).wired_octet_hops == 0);
  CHECK(signaling_tally(t, topo).wireless_octet_hops == 0);

  t.add({0, "MAG2", "LMA1", "PBU", 76, protocol::LinkKind::MagLma, ""});
  auto tally = signaling_tally(t, topo);
  CHECK(tally.wired_octet_hops == 760);
  CHECK(tally.groups.mag_lma == 76);

  t.add({1, "MN1", "MAG1", "RS", 16, protocol::LinkKind::Air, ""});
  t.add({2, "MAG1", "MN1", "DATA", 1024, protocol::LinkKind::Air, ""});
  t.add({3, "MN1", "AP1", "L2_Handover", 0, protocol::LinkKind::Local, ""});
  tally = signaling_tally(t, topo, analytic::Rational(2), analytic::Rational(3, 2));
  CHECK(tally.wireless_octet_hops == 16);
  CHECK(tally.wired_cost == analytic::Rational(1520));
  CHECK(tally.wireless_cost == analytic::Rational(24));
}

TEST_CASE("simulated tallies equal the closed-form sums") {
  const analytic::CostParams c;
  const std::pair<Scheme, analytic::Solution> pairs[] = {
      {Scheme::StandardMobileInit, analytic::Solution::Standard},
      {Scheme::StandardNetworkInit, analytic::Solution::Standard},
      {Scheme::FastHandoverMih, analytic::Solution::Fast},
      {Scheme::ProposedIntegrated, analytic::Solution::Proposed}};
  for (const auto& [scheme, solution] : pairs) {
    CAPTURE(protocol::to_string(scheme));
    const auto out = run_scenario(scenario(scheme));
    const auto tally = signaling_tally(out.transcript, Topology{});
    CHECK(tally.groups == analytic::signaling_terms(solution, c));
  }
}

TEST_CASE("frame delay sampler") {
  const WirelessLinkParams p;
  const FrameDelaySampler s(p);
  analytic::DelayParams dp;
  CHECK(s.mean() == doctest::Approx(analytic::frame_delay(dp)).epsilon(1e-6));
  std::mt19937_64 rng(2024);
  double sum = 0;
  const int samples = 1'000'000;
  for (int i = 0; i < samples; ++i) sum += s.sample(rng);
  CHECK(std::fabs(sum / samples - s.mean()) / s.mean() < 0.02);

  WirelessLinkParams clean;
  clean.rho_f = 0;
  std::mt19937_64 r2(1);
  CHECK(FrameDelaySampler(clean).sample(r2) == clean.d_wl_ms);
}

TEST_CASE("uniform01 range") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double u = uniform01(rng);
    REQUIRE(u >= 0);
    REQUIRE(u < 1);
  }
}

TEST_CASE("deterministic link timing matches the analytic delays") {
  LinkTiming t(TimingMode::Deterministic, {}, {}, 0.5, 1);
  const analytic::DelayParams dp;
  CHECK(t.wireless(16, true).delay_ms == doctest::Approx(analytic::packet_delay_wl(16, dp)));
  CHECK(t.wireless(1024, false).retransmissions == 0);
  CHECK(t.wired(76, 10) == doctest::Approx(analytic::packet_delay_wd(76, 10, dp)));
}

TEST_CASE("sampled runs are reproducible per seed") {
  for (auto s : protocol::kAllSchemes) {
    CAPTURE(protocol::to_string(s));
    const auto a = run_scenario(scenario(s, TimingMode::Sampled, 42));
    const auto b = run_scenario(scenario(s, TimingMode::Sampled, 42));
    CHECK(a.metrics == b.metrics);
    CHECK(a.transcript.to_text() == b.transcript.to_text());
  }
  const auto x = run_scenario(scenario(Scheme::ProposedIntegrated, TimingMode::Sampled, 1));
  const auto y = run_scenario(scenario(Scheme::ProposedIntegrated, TimingMode::Sampled, 2));
  CHECK(x.transcript.to_text() != y.transcript.to_text());
}

TEST_CASE("sampled mode completes and never loses with buffering") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CAPTURE(seed);
    const auto r = run_scenario(scenario(Scheme::ProposedIntegrated, TimingMode::Sampled, seed));
    CHECK(r.metrics.outcome == "completed");
    CHECK(r.metrics.packets_lost == 0);
  }
}

TEST_CASE("frame error sweep gives nondecreasing delay") {
  for (auto s : {Scheme::StandardMobileInit, Scheme::FastHandoverMih, Scheme::ProposedIntegrated}) {
    CAPTURE(protocol::to_string(s));
    std::vector<Scenario> sweep;
    for (int k = 0; k <= 6; ++k) {
      auto sc = scenario(s);
      sc.wireless.rho_f = k * 0.05;
      sc.sweep_value = sc.wireless.rho_f;
      sweep.push_back(sc);
    }
    const auto rows = collect_sweep(sweep);
    REQUIRE(rows.size() == 7);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(*rows[i].handover_delay_ms >= *rows[i - 1].handover_delay_ms);
      CHECK(*rows[i].sweep_value == doctest::Approx(i * 0.05));
    }
  }
}

TEST_CASE("serial and parallel sweeps agree") {
  std::vector<Scenario> sweep;
  for (auto s : protocol::kAllSchemes)
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
      sweep.push_back(scenario(s, TimingMode::Sampled, seed));
  const auto serial = collect_sweep(sweep, 1);
  const auto parallel = collect_sweep(sweep, 4);
  CHECK(serial == parallel);
  CHECK(to_csv(serial) == to_csv(parallel));
}

TEST_CASE("standard loss matches the interruption") {
  const auto r = run_scenario(scenario(Scheme::StandardMobileInit));
  const double t_sh = analytic::handover_delay(analytic::Solution::Standard, {});
  const auto expect = static_cast<std::int64_t>(std::floor(t_sh / 10.0));
  CHECK(std::llabs(static_cast<std::int64_t>(r.metrics.packets_lost) - expect) <= 1);
}

TEST_CASE("scenario validation") {
  auto sc = scenario(Scheme::ProposedIntegrated);
  sc.wireless.rho_f = 1.5;
  sc.m = -1;
  sc.cbr_interval_ms = 0;
  try {
    run_scenario(sc);
    FAIL("expected ConfigInvalid");
  } catch (const ConfigInvalid& e) {
    CHECK(e.errors().size() == 3);
    CHECK(has_field(e, "rho_f"));
    CHECK(has_field(e, "m"));
    CHECK(has_field(e, "cbr_interval"));
    CHECK(std::string(e.what()).starts_with("invalid configuration: "));
  }
  CHECK(scenario(Scheme::FpmipReactive).check().empty());
}

TEST_CASE("sweep validation aggregates every scenario") {
  std::vector<Scenario> sweep{scenario(Scheme::ProposedIntegrated),
                              scenario(Scheme::ProposedIntegrated)};
  sweep[1].wireless.rho_f = -1;
  try {
    collect_sweep(sweep);
    FAIL("expected ConfigInvalid");
  } catch (const ConfigInvalid& e) {
    REQUIRE_FALSE(e.errors().empty());
    CHECK(e.errors()[0].field.starts_with("scenario[1]."));
  }
  CHECK_THROWS_AS(collect_sweep(std::span<const Scenario>{}), ConfigInvalid);
}

TEST_CASE("timing mode names") {
  CHECK(parse_timing_mode("sampled") == TimingMode::Sampled);
  CHECK(to_string(TimingMode::Deterministic) == "deterministic");
  CHECK_THROWS_AS(parse_timing_mode("random"), std::invalid_argument);
}

TEST_CASE("metrics CSV") {
  CHECK(metrics_csv_header() ==
        "scheme,mode,seed,outcome,sweep_value,handover_delay_ms,packets_generated,packets_lost,"
        "packets_duplicated_suppressed,signaling_wireless,signaling_wired,transcript_length");
  MetricsRecord r;
  r.scheme = "proposed";
  r.mode = "deterministic";
  r.seed = 1;
  r.outcome = "commit-rejected";
  CHECK(to_csv_row(r) == "proposed,deterministic,1,commit-rejected,,,0,0,0,0,0,0");
  r.handover_delay_ms = 268.3832931;
  r.sweep_value = 0.25;
  CHECK(to_csv_row(r).find(",0.25,268.383293,") != std::string::npos);
  const auto out = run_scenario(scenario(Scheme::ProposedIntegrated));
  CHECK(out.metrics.signaling_wireless == 1550);
  CHECK(out.metrics.signaling_wired == 61190);
  CHECK(out.metrics.transcript_length == out.transcript.size());
}
