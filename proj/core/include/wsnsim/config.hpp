#pragma once

// Run configuration: a flat `key=value` text format, one key per line.
// `#` starts a comment. Unknown or repeated keys are rejected; missing keys
// keep their defaults.
//
//   n_nodes, field_width, field_height, sink_x, sink_y, initial_energy,
//   ch_probability, clustering_rate_cap, tx_range, packet_bits, control_bits,
//   e_elec, eps_fs, eps_amp, e_da, max_rounds, seed,
//   protocol (leach | oleach | compare)

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "wsnsim/net_model.hpp"
#include "wsnsim/radio_energy.hpp"

namespace wsnsim {

enum class RunMode : std::uint8_t { Leach, OLeach, Compare };

const char* to_string(RunMode mode);
std::optional<RunMode> parse_run_mode(std::string_view text);

struct RunSpec {
  NetworkConfig network;
  RadioParams radio;
  RunMode mode = RunMode::Leach;
  std::filesystem::path output_dir;

  [[nodiscard]] bool compare() const { return mode == RunMode::Compare; }
};

/// Parses and validates. Throws ConfigError with the line number for syntax
/// problems and the field name for out-of-range values.
RunSpec parse_config(std::string_view text);

/// Reads `path` and parses it. Throws IoError if the file cannot be read.
RunSpec load_config(const std::filesystem::path& path);

/// Throws ConfigError naming the first offending field.
void validate(const RunSpec& spec);

/// Renders a RunSpec back in the config format (every key, fixed order).
std::string to_config_text(const RunSpec& spec);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wsnsim
