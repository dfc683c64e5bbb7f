#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <map>
#include <fstream>
#include <random>
#include <sstream>

#include "mihx/cli/codec_text.hpp"
#include "mihx/cli/commands.hpp"
#include "mihx/cli/config.hpp"
#include "mihx/cli/figures.hpp"
#include "mihx/cli/validate.hpp"
#include "mihx/codec/error.hpp"
#include "mihx/sim/scenario.hpp"

namespace fs = std::filesystem;
using namespace mihx;
using namespace mihx::cli;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mihx");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("mihx-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& text = {}) const {
    const auto p = (path / name).string();
    if (!text.empty()) std::ofstream(p) << text;
    return p;
  }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& row) {
  std::vector<std::string> out;
  std::istringstream in(row);
  for (std::string c; std::getline(in, c, ',');) out.push_back(c);
  return out;
}

std::string testdata(const std::string& name) {
  return std::string(MIHX_TESTDATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("config parsing") {
  SUBCASE("defaults") {
    const auto c = RunConfig::parse("");
    CHECK(c.delay.rho_f == 0.1);
    CHECK(c.cost.p_f == analytic::Rational(1, 2));
    CHECK(c.mobility.r == 100);
    CHECK_FALSE(c.sweep);
  }
  SUBCASE("shared keys reach every group") {
    const auto c = RunConfig::parse("h_mag_lma = 4\nrho_f = 0.2 # comment\n\n# only a comment\n");
    CHECK(c.cost.h_mag_lma == 4);
    CHECK(c.delay.h_mag_lma == 4);
    CHECK(c.make_scenario().topology.h_mag_lma == 4);
    CHECK(c.make_scenario().wireless.rho_f == 0.2);
  }
  SUBCASE("d sets both road spacings") {
    const auto c = RunConfig::parse("d = 20");
    CHECK(c.mobility.d_x == 20);
    CHECK(c.mobility.d_y == 20);
  }
  SUBCASE("size overrides") {
    const auto c = RunConfig::parse("size.M_PBU = 77");
    CHECK(c.catalog().size("M_PBU", 0, 0) == 77);
    CHECK(c.make_scenario().catalog.size("M_PBU", 0, 0) == 77);
  }
  SUBCASE("hnp list") {
    const auto c = RunConfig::parse("hnp = 2001:db8:5::/64\nhnp = 2001:db8:6::/64");
    CHECK(c.make_scenario().profile.hnps.size() == 2);
  }
  SUBCASE("scheme and mode") {
    const auto c = RunConfig::parse("scheme = fpmip-reactive\nmode = sampled\nseed = 9");
    const auto s = c.make_scenario();
    CHECK(s.scheme == protocol::Scheme::FpmipReactive);
    CHECK(s.mode == sim::TimingMode::Sampled);
    CHECK(s.seed == 9);
  }
}

TEST_CASE("config errors") {
  auto error_text = [](const std::string& text) -> std::string {
    try {
      RunConfig::parse(text, "test.cfg");
    } catch (const sim::ConfigInvalid& e) {
      return e.what();
    }
    return "";
  };
  CHECK(error_text("bogus = 1").find("test.cfg:1") != std::string::npos);
  CHECK(error_text("rho_f = 0.1\ntau = abc").find("test.cfg:2") != std::string::npos);
  CHECK_FALSE(error_text("no equals sign").empty());
  CHECK_FALSE(error_text("size.M_77 = 5").empty());
  CHECK_FALSE(error_text("sweep.rho_f = 0:0.1:0.3\nsweep.D_wl = 1:1:5").empty());
  CHECK_FALSE(error_text("sweep.rho_f = 0:0:1").empty());
  CHECK_FALSE(error_text("scheme = teleport").empty());
  try {
    RunConfig::load("/nonexistent/dir/mihx.cfg");
    FAIL("expected ConfigInvalid");
  } catch (const sim::ConfigInvalid& e) {
    CHECK(std::string(e.what()).find("/nonexistent/dir/mihx.cfg") != std::string::npos);
  }
}

TEST_CASE("sweep spec") {
  const auto s = SweepSpec::parse("rho_f", "0:0.05:0.3");
  const auto v = s.values();
  REQUIRE(v.size() == 7);
  CHECK(v.back() == doctest::Approx(0.3));
  CHECK(format_number(0.1 + 0.2) == "0.3");
  CHECK(format_number(50) == "50");
  CHECK_THROWS_AS(SweepSpec::parse("x", "1:2"), sim::ConfigInvalid);
}

TEST_CASE("every config key is accepted with its default") {
  // every key must parse its own value when echoed back from a fresh config
  const std::map<std::string, std::string> sample{
      {"scheme", "proposed"}, {"mode", "deterministic"}, {"candidates_available", "true,false"},
      {"predictive_forward", "false"}, {"reactive_forward", "true"}, {"old_ap_id", "AP2"},
      {"mn_id", "x@y"}, {"lla_iid", "iid:0000000000000001"}, {"lmaa", "2001:db8::2"},
      {"hnp", "2001:db8:9::/64"}, {"retx_factor", "odds"}, {"A", "1"}, {"B", "3/2"}, {"p_f", "0.25"}};
  for (const auto& key : config_keys()) {
    CAPTURE(key);
    const auto it = sample.find(key);
    const std::string value = it != sample.end() ? it->second : "2";
    CHECK_NOTHROW(RunConfig::parse(key + " = " + value));
  }
  CHECK(config_keys().size() > 40);
}

TEST_CASE("figure ids and headers") {
  CHECK(figure_ids().size() == 8);
  CHECK_THROWS_AS(figure_spec("fig9"), UnknownFigure);
  const RunConfig cfg;
  CHECK(lines(figure_csv("fig10", cfg))[0] == "x,standard,fast,proposed");
  CHECK(lines(figure_csv("fig12", cfg))[0] == "x,x2,standard,fast,proposed");
  CHECK(figure_spec("fig15").axis.param == "v_min");
  CHECK(figure_spec("fig15").axis.stop == 36);
}

TEST_CASE("fig10 columns are nondecreasing") {
  const auto rows = lines(figure_csv("fig10", RunConfig{}));
  REQUIRE(rows.size() == 8);
  std::vector<double> prev(3, -1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cols = split(rows[i]);
    REQUIRE(cols.size() == 4);
    for (int k = 0; k < 3; ++k) {
      const double v = std::stod(cols[k + 1]);
      CHECK(v >= prev[k]);
      prev[k] = v;
    }
  }
  CHECK(split(rows[3])[0] == "0.1");
  CHECK(std::stod(split(rows[3])[1]) == doctest::Approx(284.002339).epsilon(1e-8));
}

TEST_CASE("fig14 at P_f = 0.5") {
  for (const auto& row : lines(figure_csv("fig14", RunConfig{}))) {
    const auto cols = split(row);
    if (cols[0] != "0.5") continue;
    CHECK(std::stod(cols[3]) == doctest::Approx(21.62).epsilon(1e-3));
    CHECK(std::stod(cols[3]) == doctest::Approx(3.403576e-4 * 63515).epsilon(1e-5));
    return;
  }
  FAIL("no P_f = 0.5 row");
}

TEST_CASE("fig12 grid row (100, 10)") {
  const auto rows = lines(figure_csv("fig12", RunConfig{}));
  CHECK(rows.size() == 1 + 10 * 10);
  bool found = false;
  for (const auto& row : rows) {
    const auto cols = split(row);
    if (cols[0] == "100" && cols[1] == "10") {
      found = true;
      for (int k = 2; k <= 4; ++k) CHECK(std::stod(cols[k]) == doctest::Approx(3.4036e-4).epsilon(1e-3));
    }
  }
  CHECK(found);
}

TEST_CASE("figure sweeps override the default axis") {
  const auto cfg = RunConfig::parse("sweep.D_wl = 5:5:15");
  const auto rows = lines(figure_csv("fig11", cfg));
  REQUIRE(rows.size() == 4);
  CHECK(split(rows[1])[0] == "5");
  CHECK_THROWS_AS(figure_csv("fig10", cfg), sim::ConfigInvalid);
}

TEST_CASE("figure sweeps hold every other parameter") {
  const auto cfg = RunConfig::parse("h_mag_mag = 3");
  const auto rows = lines(figure_csv("fig14", cfg));
  const auto base = lines(figure_csv("fig14", RunConfig{}));
  CHECK(rows[1] != base[1]);
  CHECK(figure_csv("fig14", cfg) == figure_csv("fig14", cfg));
}

TEST_CASE("validation report") {
  const auto ok = run_validation(RunConfig{});
  CHECK(ok.ok());
  CHECK(ok.checks.size() == 8);
  CHECK(lines(ok.to_text()).size() == 8);
  for (const auto& line : lines(ok.to_text())) CHECK(line.starts_with("PASS "));

  const auto bad = run_validation(RunConfig::parse("size.M_PBU = 77"));
  CHECK_FALSE(bad.ok());
  int failing = 0;
  for (const auto& c : bad.checks) {
    if (!c.pass) {
      ++failing;
      CHECK(c.quantity == "tally");
    }
  }
  CHECK(failing == 4);
}

TEST_CASE("validate command exit codes") {
  TempDir tmp;
  const auto good = invoke({"validate"});
  CHECK(good.code == exit_code::kOk);
  const auto cfg = tmp.file("bad.cfg", "size.M_PBU = 77\n");
  const auto bad = invoke({"validate", "--config", cfg});
  CHECK(bad.code == exit_code::kValidation);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("codec text") {
  SUBCASE("decode names the status meaning") {
    const auto text = decode_hex_to_text(slurp(testdata("commit_response_ext_130.hex")));
    CHECK(text.find("Insufficient resources") != std::string::npos);
    CHECK(text.find("kind = MIH_N2N_HO_Commit_response_ext") != std::string::npos);
  }
  SUBCASE("encode then decode is stable") {
    const std::string spec =
        "kind = MIH_N2N_HO_Commit_request_ext\n"
        "transaction_id = 7\n"
        "mn_id = mn1@example\n"
        "lla_iid = iid:0011223344556677\n"
        "lmaa = 2001:db8::1\n"
        "hnp = 2001:db8:1::/64\n";
    const auto hex = encode_text_to_hex(spec);
    CHECK(codec::from_hex(hex) == codec::from_hex(slurp(testdata("commit_request_ext.hex"))));
    const auto text = decode_hex_to_text(hex);
    CHECK(decode_hex_to_text(encode_text_to_hex(text)) == text);
  }
  SUBCASE("syntax errors carry the line") {
    try {
      parse_message_text("kind = MIH_Link_Up_indication\nversion = 99\n");
      FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).starts_with("line 2:"));
    }
    CHECK_THROWS_AS(parse_message_text("transaction_id = 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_message_text("kind = Nope\n"), std::invalid_argument);
  }
}

TEST_CASE("codec command") {
  TempDir tmp;
  const auto dec = invoke({"codec", "decode", testdata("commit_response_ext_130.hex")});
  CHECK(dec.code == exit_code::kOk);
  CHECK(dec.out.find("Insufficient resources") != std::string::npos);

  const auto text_path = tmp.file("msg.txt", dec.out);
  const auto enc = invoke({"codec", "encode", text_path});
  CHECK(enc.code == exit_code::kOk);
  const auto hex_path = tmp.file("msg.hex", enc.out);
  CHECK(invoke({"codec", "decode", hex_path}).out == dec.out);

  const auto cut = tmp.file("cut.hex", "18 00 38 40 00 07 00 03 03 01\n");
  const auto err = invoke({"codec", "decode", cut});
  CHECK(err.code == exit_code::kUsage);
  CHECK(err.err.find("Truncated at offset") != std::string::npos);
}

TEST_CASE("simulate command") {
  TempDir tmp;
  const auto cfg = tmp.file("run.cfg", "scheme = proposed\nmode = sampled\n");
  const auto a = tmp.file("a.csv");
  const auto b = tmp.file("b.csv");
  REQUIRE(invoke({"simulate", "--config", cfg, "--out", a, "--seed", "5"}).code == 0);
  REQUIRE(invoke({"simulate", "--config", cfg, "--out", b, "--seed", "5"}).code == 0);
  CHECK(slurp(a) == slurp(b));
  const auto ta = slurp((tmp.path / "a.transcript").string());
  CHECK(ta == slurp((tmp.path / "b.transcript").string()));
  CHECK(ta.find("| HI |") == std::string::npos);
  CHECK(ta.find("| HACK |") == std::string::npos);
  CHECK(lines(slurp(a)).size() == 2);

  const auto sweep_cfg = tmp.file("sweep.cfg", "scheme = fast-mih\nsweep.rho_f = 0:0.1:0.2\n");
  const auto s = tmp.file("s.csv");
  REQUIRE(invoke({"simulate", "--config", sweep_cfg, "--out", s}).code == 0);
  CHECK(lines(slurp(s)).size() == 4);
  CHECK(slurp((tmp.path / "s.transcript").string()).find("# sweep rho_f = 0.1") !=
        std::string::npos);

  const auto missing = invoke({"simulate", "--config", "/no/such/file.cfg"});
  CHECK(missing.code == exit_code::kUsage);
  CHECK(missing.err.find("/no/such/file.cfg") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == exit_code::kUsage);
  CHECK(invoke({"launch"}).code == exit_code::kUsage);
  CHECK(invoke({"figure", "fig99"}).code == exit_code::kUsage);
  CHECK(invoke({"figure"}).code == exit_code::kUsage);
}
