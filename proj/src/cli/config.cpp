#include "mihx/cli/config.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace mihx::cli {

namespace {

using sim::ConfigInvalid;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double to_double(std::string_view key, std::string_view v) {
  std::string s(v);
  try {
    std::size_t used = 0;
    double d = std::stod(s, &used);
    if (used == s.size() && std::isfinite(d)) return d;
  } catch (const std::exception&) {
  }
  throw ConfigInvalid(std::string(key), "expected a number, got '" + s + "'");
}

template <typename Int>
Int to_int(std::string_view key, std::string_view v) {
  Int out{};
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) {
    throw ConfigInvalid(std::string(key), "expected an integer, got '" + std::string(v) + "'");
  }
  return out;
}

bool to_bool(std::string_view key, std::string_view v) {
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw ConfigInvalid(std::string(key), "expected true/false, got '" + std::string(v) + "'");
}

analytic::Rational to_rational(std::string_view key, std::string_view v) {
  try {
    return analytic::parse_rational(v);
  } catch (const std::exception& e) {
    throw ConfigInvalid(std::string(key), e.what());
  }
}

template <typename F>
auto wrap(std::string_view key, F&& f) {
  try {
    return f();
  } catch (const ConfigInvalid&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigInvalid(std::string(key), e.what());
  }
}

using Setter = std::function<void(RunConfig&, std::string_view key, std::string_view value)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = [] {
    std::map<std::string, Setter, std::less<>> t;
    auto dbl = [&t](const char* key, std::function<void(RunConfig&, double)> apply) {
      t[key] = [apply](RunConfig& c, std::string_view k, std::string_view v) { apply(c, to_double(k, v)); };
    };
    auto hops = [&t](const char* key, std::function<void(RunConfig&, int)> apply) {
      t[key] = [apply](RunConfig& c, std::string_view k, std::string_view v) { apply(c, to_int<int>(k, v)); };
    };

    // wireless and wired links
    dbl("tau", [](RunConfig& c, double v) { c.delay.tau_ms = v; });
    dbl("rho_f", [](RunConfig& c, double v) { c.delay.rho_f = v; });
    dbl("L_f", [](RunConfig& c, double v) { c.delay.frame_size = v; });
    dbl("D_wl", [](RunConfig& c, double v) { c.delay.d_wl_ms = v; });
    hops("retx_limit", [](RunConfig& c, int v) { c.delay.retx_limit = v; });
    dbl("bw_wired", [](RunConfig& c, double v) { c.delay.bw_wired = v; });
    dbl("D_wired", [](RunConfig& c, double v) { c.delay.d_wired_ms = v; });
    dbl("t_l2", [](RunConfig& c, double v) { c.delay.t_l2_ms = v; });
    dbl("L_D", [](RunConfig& c, double v) { c.delay.data_size = v; });

    // topology
    hops("h_mn_mag", [](RunConfig& c, int v) { c.cost.h_mn_mag = v; });
    hops("h_mag_lma", [](RunConfig& c, int v) { c.cost.h_mag_lma = v; c.delay.h_mag_lma = v; });
    hops("h_mag_mag", [](RunConfig& c, int v) { c.cost.h_mag_mag = v; });
    hops("h_mag_miis", [](RunConfig& c, int v) { c.cost.h_mag_miis = v; });

    // signaling cost
    t["p_f"] = [](RunConfig& c, std::string_view k, std::string_view v) { c.cost.p_f = to_rational(k, v); };
    t["A"] = [](RunConfig& c, std::string_view k, std::string_view v) { c.cost.wired_unit = to_rational(k, v); };
    t["B"] = [](RunConfig& c, std::string_view k, std::string_view v) { c.cost.wireless_unit = to_rational(k, v); };
    hops("n", [](RunConfig& c, int v) { c.cost.n = v; });
    hops("m", [](RunConfig& c, int v) { c.cost.m = v; });
    t["retx_factor"] = [](RunConfig& c, std::string_view k, std::string_view v) {
      if (v == "odds") c.cost.retx = analytic::RetxFactor::Odds;
      else if (v == "expected_transmissions") c.cost.retx = analytic::RetxFactor::ExpectedTransmissions;
      else throw ConfigInvalid(std::string(k), "expected 'odds' or 'expected_transmissions'");
    };

    // mobility
    dbl("a", [](RunConfig& c, double v) { c.mobility.a = v; });
    dbl("b", [](RunConfig& c, double v) { c.mobility.b = v; });
    dbl("d", [](RunConfig& c, double v) { c.mobility.d_x = v; c.mobility.d_y = v; });
    dbl("d_x", [](RunConfig& c, double v) { c.mobility.d_x = v; });
    dbl("d_y", [](RunConfig& c, double v) { c.mobility.d_y = v; });
    dbl("r", [](RunConfig& c, double v) { c.mobility.r = v; });
    dbl("v_min", [](RunConfig& c, double v) { c.mobility.v_min = v; });
    dbl("v_max", [](RunConfig& c, double v) { c.mobility.v_max = v; });
    dbl("t_max", [](RunConfig& c, double v) { c.mobility.t_max = v; });
    hops("m_mob", [](RunConfig& c, int v) { c.mobility.m_mob = v; });

    // simulation scenario
    t["scheme"] = [](RunConfig& c, std::string_view k, std::string_view v) {
      c.scenario.scheme = wrap(k, [&] { return protocol::parse_scheme(v); });
    };
    t["mode"] = [](RunConfig& c, std::string_view k, std::string_view v) {
      c.scenario.mode = wrap(k, [&] { return sim::parse_timing_mode(v); });
    };
    t["seed"] = [](RunConfig& c, std::string_view k, std::string_view v) { c.scenario.seed = to_int<std::uint64_t>(k, v); };
    dbl("cbr_interval", [](RunConfig& c, double v) { c.scenario.cbr_interval_ms = v; });
    t["buffer_capacity"] = [](RunConfig& c, std::string_view k, std::string_view v) {
      c.scenario.buffer_capacity = to_int<std::size_t>(k, v);
    };
    dbl("trigger", [](RunConfig& c, double v) { c.scenario.handover.trigger_ms = v; });
    dbl("traffic_start", [](RunConfig& c, double v) { c.scenario.handover.traffic_start_ms = v; });
    t["candidates_available"] = [](RunConfig& c, std::string_view k, std::string_view v) {
      std::vector<bool> flags;
      std::string s(v);
      std::stringstream ss(s);
      for (std::string item; std::getline(ss, item, ',');) flags.push_back(to_bool(k, trim(item)));
      c.scenario.handover.candidate_available = flags;
    };
    t["hack_code"] = [](RunConfig& c, std::string_view k, std::string_view v) {
      c.scenario.handover.hack_code = to_int<std::uint8_t>(k, v);
    };
    t["commit_status"] = [](RunConfig& c, std::string_view k, std::string_view v) {
      c.scenario.handover.commit_status = to_int<std::uint8_t>(k, v);
    };
    t["predictive_forward"] = [](RunConfig& c, std::string_view k, std::string_view v) {
      c.scenario.handover.predictive_forward = to_bool(k, v);
    };
    t["reactive_forward"] = [](RunConfig& c, std::string_view k, std::string_view v) {
      c.scenario.handover.reactive_forward = to_bool(k, v);
    };
    t["old_ap_id"] = [](RunConfig& c, std::string_view, std::string_view v) { c.scenario.handover.old_ap_id = v; };
    t["mn_id"] = [](RunConfig& c, std::string_view, std::string_view v) { c.scenario.profile.mn_id = v; };
    t["lla_iid"] = [](RunConfig& c, std::string_view k, std::string_view v) {
      c.scenario.profile.lla_iid = wrap(k, [&] { return codec::LinkAddress::parse(v); });
    };
    t["lmaa"] = [](RunConfig& c, std::string_view k, std::string_view v) {
      c.scenario.profile.lmaa = wrap(k, [&] { return codec::IpAddress::parse(v); });
    };
    return t;
  }();
  return table;
}

}  // namespace

std::string format_number(double v) {
  // 12 significant digits absorb the drift of start + i*step.
  double r = std::stod(fmt::format("{:.12g}", v));
  if (r == 0) r = 0;  // no "-0"
  return fmt::format("{}", r);
}

std::vector<double> SweepSpec::values() const {
  std::vector<double> out;
  const double span = (stop - start) / step;
  const auto count = static_cast<long>(std::floor(span + 1e-9)) + 1;
  for (long i = 0; i < count; ++i) out.push_back(std::stod(format_number(start + i * step)));
  return out;
}

SweepSpec SweepSpec::parse(std::string param, std::string_view text) {
  const std::string key = "sweep." + param;
  auto c1 = text.find(':');
  auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw ConfigInvalid(key, "expected start:step:stop");
  SweepSpec s;
  s.param = std::move(param);
  s.start = to_double(key, trim(text.substr(0, c1)));
  s.step = to_double(key, trim(text.substr(c1 + 1, c2 - c1 - 1)));
  s.stop = to_double(key, trim(text.substr(c2 + 1)));
  if (s.step <= 0) throw ConfigInvalid(key, "step must be > 0");
  if (s.stop < s.start) throw ConfigInvalid(key, "stop must be >= start");
  if ((s.stop - s.start) / s.step > 1e6) throw ConfigInvalid(key, "more than 10^6 points");
  return s;
}

void RunConfig::set(std::string_view key, std::string_view value) {
  if (key.starts_with("size.")) {
    auto abbrev = std::string(key.substr(5));
    if (!analytic::Catalog::table5().contains(abbrev)) {
      throw ConfigInvalid(std::string(key), "no catalog message '" + abbrev + "'");
    }
    auto octets = to_int<std::int64_t>(key, value);
    if (octets < 0) throw ConfigInvalid(std::string(key), "size must be >= 0");
    size_overrides[abbrev] = octets;
    return;
  }
  if (key.starts_with("sweep.")) {
    auto param = std::string(key.substr(6));
    if (setters().find(param) == setters().end()) {
      throw ConfigInvalid(std::string(key), "unknown sweep parameter '" + param + "'");
    }
    if (sweep && sweep->param != param) {
      throw ConfigInvalid(std::string(key), "only one sweep axis is allowed (already sweeping " +
                                                sweep->param + ")");
    }
    sweep = SweepSpec::parse(param, value);
    return;
  }
  if (key == "hnp") {
    auto prefix = wrap(key, [&] { return codec::Prefix::parse(value); });
    if (!hnp_from_config_) scenario.profile.hnps.clear();
    hnp_from_config_ = true;
    scenario.profile.hnps.push_back(prefix);
    return;
  }
  auto it = setters().find(key);
  if (it == setters().end()) throw ConfigInvalid(std::string(key), "unknown key");
  it->second(*this, key, value);
}

analytic::Catalog RunConfig::catalog() const {
  auto c = analytic::Catalog::table5();
  for (const auto& [abbrev, octets] : size_overrides) c = c.with_override(abbrev, octets);
  return c;
}

sim::Scenario RunConfig::make_scenario() const {
  sim::Scenario s = scenario;
  s.wireless = sim::WirelessLinkParams{delay.tau_ms, delay.rho_f, delay.frame_size, delay.d_wl_ms,
                                       delay.retx_limit};
  s.wired = sim::WiredLinkParams{delay.bw_wired, delay.d_wired_ms};
  s.topology = sim::Topology{cost.h_mn_mag, cost.h_mag_lma, cost.h_mag_mag, cost.h_mag_miis};
  s.t_l2_ms = delay.t_l2_ms;
  s.data_size = delay.data_size;
  s.p_f = analytic::to_double(cost.p_f);
  s.n = cost.n;
  s.m = cost.m;
  s.catalog = catalog();
  return s;
}

RunConfig RunConfig::parse(std::string_view text, std::string_view source) {
  RunConfig cfg;
  std::vector<sim::FieldError> errors;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    const std::string where = fmt::format("{}:{}", source, line_no);
    if (eq == std::string_view::npos) {
      errors.push_back({where, "expected 'key = value'"});
      continue;
    }
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    try {
      cfg.set(key, value);
    } catch (const ConfigInvalid& e) {
      for (const auto& fe : e.errors()) errors.push_back({where + " " + fe.field, fe.message});
    }
  }
  if (!errors.empty()) throw ConfigInvalid(std::move(errors));
  return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigInvalid("config", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, _] : setters()) keys.push_back(k);
  keys.push_back("hnp");
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace mihx::cli
