// wsnsim: run LEACH / O-LEACH and write per-round CSV traces plus a summary.
//
//   wsnsim [--config FILE] --out DIR [--seed N] [--protocol leach|oleach|compare]
//
// Exit codes: 0 success, 1 config error, 2 I/O error, 3 internal invariant violation.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wsnsim/config.hpp"
#include "wsnsim/report.hpp"
#include "wsnsim/simulation.hpp"

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 1, kIoError = 2, kInternalError = 3 };

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) {
    throw wsnsim::IoError("cannot write " + path.string());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LEACH / O-LEACH wireless sensor network simulator"};
  std::optional<std::string> config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> protocol;
  bool quiet = false;
  app.add_option("-c,--config", config_path, "key=value config file (defaults if omitted)");
  app.add_option("-o,--out", out_dir, "output directory for CSV traces and summary")->required();
  app.add_option("-s,--seed", seed, "override the config seed");
  app.add_option("-p,--protocol", protocol, "override the protocol: leach, oleach or compare");
  app.add_flag("-q,--quiet", quiet, "do not print the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    wsnsim::RunSpec spec =
        config_path ? wsnsim::load_config(*config_path) : wsnsim::parse_config("");
    if (seed) {
      spec.network.seed = *seed;
    }
    if (protocol) {
      auto mode = wsnsim::parse_run_mode(*protocol);
      if (!mode) {
        throw wsnsim::ConfigError("protocol: expected leach, oleach or compare, got '" +
                                  *protocol + "'");
      }
      spec.mode = *mode;
    }
    spec.output_dir = out_dir;
    wsnsim::validate(spec);

    std::error_code ec;
    std::filesystem::create_directories(spec.output_dir, ec);
    if (ec) {
      throw wsnsim::IoError("cannot create output directory " + spec.output_dir.string() + ": " +
                            ec.message());
    }

    const auto traces = wsnsim::run_simulation(spec);
    for (const auto& trace : traces) {
      wsnsim::emit_csv(trace, spec.output_dir /
                                  (std::string(wsnsim::to_string(trace.config.protocol)) + ".csv"));
    }
    const std::string summary = wsnsim::emit_summary(traces);
    write_text(spec.output_dir / "summary.txt", summary);
    write_text(spec.output_dir / "config.txt", wsnsim::to_config_text(spec));
    if (!quiet) {
      std::cout << summary;
    }
    return kOk;
  } catch (const wsnsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const wsnsim::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const wsnsim::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}
