#include "mihx/cli/commands.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mihx/cli/codec_text.hpp"
#include "mihx/cli/config.hpp"
#include "mihx/cli/figures.hpp"
#include "mihx/cli/validate.hpp"
#include "mihx/codec/error.hpp"
#include "mihx/sim/metrics.hpp"
#include "mihx/sim/run.hpp"

namespace mihx::cli {

namespace {

struct Options {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string figure;
  std::string input = "-";
};

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
  if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
  }
}

RunConfig load_config(const Options& o) {
  RunConfig cfg = o.config.empty() ? RunConfig{} : RunConfig::load(o.config);
  if (o.seed) cfg.scenario.seed = *o.seed;
  return cfg;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const RunConfig cfg = load_config(o);
  const std::string metrics_path = o.out.empty() ? "metrics.csv" : o.out;
  const std::string transcript_path =
      std::filesystem::path(metrics_path).replace_extension(".transcript").string();

  std::vector<sim::MetricsRecord> rows;
  std::string transcripts;
  auto run_one = [&](const sim::Scenario& s) {
    auto r = sim::run_scenario(s);
    if (s.sweep_value) {
      transcripts += fmt::format("# sweep {} = {}\n", cfg.sweep->param, format_number(*s.sweep_value));
    }
    transcripts += r.transcript.to_text();
    rows.push_back(std::move(r.metrics));
  };

  if (cfg.sweep) {
    for (double v : cfg.sweep->values()) {
      RunConfig c = cfg;
      c.set(cfg.sweep->param, format_number(v));
      auto s = c.make_scenario();
      s.sweep_value = v;
      run_one(s);
    }
  } else {
    run_one(cfg.make_scenario());
  }

  write_file(metrics_path, sim::to_csv(rows));
  write_file(transcript_path, transcripts);
  out << fmt::format("wrote {} ({} row{}) and {}\n", metrics_path, rows.size(),
                     rows.size() == 1 ? "" : "s", transcript_path);
  return exit_code::kOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto report = run_validation(load_config(o));
  const auto text = report.to_text();
  out << text;
  if (!o.out.empty()) write_file(o.out, text);
  return report.ok() ? exit_code::kOk : exit_code::kValidation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"MIH-assisted PMIPv6 handover toolkit", "mihx"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--config", o.config, "key = value configuration file");
  app.add_option("--out", o.out, "output file");
  app.add_option("--seed", o.seed, "64-bit seed for sampled mode");

  auto* figure = app.add_subcommand("figure", "write figure data as CSV");
  figure->add_option("id", o.figure, "fig10 ... fig17")->required();
  auto* simulate = app.add_subcommand("simulate", "run one scenario (or a sweep)");
  auto* validate = app.add_subcommand("validate", "check the simulator against the closed forms");
  auto* codec_cmd = app.add_subcommand("codec", "MIH message codec");
  codec_cmd->require_subcommand(1);
  codec_cmd->fallthrough();
  auto* encode = codec_cmd->add_subcommand("encode", "field text to hex");
  auto* decode = codec_cmd->add_subcommand("decode", "hex to field text");
  encode->add_option("input", o.input, "input file, - for stdin");
  decode->add_option("input", o.input, "input file, - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return exit_code::kUsage;
  }

  try {
    if (*figure) {
      emit(o, out, figure_csv(o.figure, load_config(o)));
      return exit_code::kOk;
    }
    if (*simulate) return cmd_simulate(o, out);
    if (*validate) return cmd_validate(o, out);
    if (*encode) {
      emit(o, out, encode_text_to_hex(read_input(o.input)));
      return exit_code::kOk;
    }
    if (*decode) {
      emit(o, out, decode_hex_to_text(read_input(o.input)));
      return exit_code::kOk;
    }
  } catch (const sim::ConfigInvalid& e) {
    err << "error: ConfigInvalid: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const codec::CodecError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}

}  // namespace mihx::cli
