#include "wsnsim/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace wsnsim {

const char* to_string(RunMode mode) {
  switch (mode) {
    case RunMode::Leach: return "leach";
    case RunMode::OLeach: return "oleach";
    case RunMode::Compare: return "compare";
  }
  return "unknown";
}

std::optional<RunMode> parse_run_mode(std::string_view text) {
  if (text == "leach") return RunMode::Leach;
  if (text == "oleach") return RunMode::OLeach;
  if (text == "compare") return RunMode::Compare;
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void line_error(std::size_t line, const std::string& what) {
  throw ConfigError("line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view key, std::string_view value, std::size_t line) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end || !std::isfinite(out)) {
    line_error(line, std::string(key) + ": expected a number, got '" + std::string(value) + "'");
  }
  return out;
}

template <typename Int>
Int parse_unsigned(std::string_view key, std::string_view value, std::size_t line) {
  if (!value.empty() && value.front() == '-') {
    throw ConfigError(std::string(key) + ": value out of range, expected >= 0 (line " +
                      std::to_string(line) + ")");
  }
  Int out = 0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec == std::errc::result_out_of_range) {
    throw ConfigError(std::string(key) + ": value out of range (line " + std::to_string(line) +
                      ")");
  }
  if (ec != std::errc{} || ptr != end) {
    line_error(line, std::string(key) + ": expected a non-negative integer, got '" +
                         std::string(value) + "'");
  }
  return out;
}

using Setter = std::function<void(RunSpec&, std::string_view, std::size_t)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = [] {
    std::map<std::string, Setter, std::less<>> t;
    auto real = [&t](const char* key, auto member) {
      t.emplace(key, [key, member](RunSpec& s, std::string_view v, std::size_t line) {
        member(s) = parse_double(key, v, line);
      });
    };
    real("field_width", [](RunSpec& s) -> double& { return s.network.field_width; });
    real("field_height", [](RunSpec& s) -> double& { return s.network.field_height; });
    real("sink_x", [](RunSpec& s) -> double& { return s.network.sink_pos.x; });
    real("sink_y", [](RunSpec& s) -> double& { return s.network.sink_pos.y; });
    real("initial_energy", [](RunSpec& s) -> double& { return s.network.initial_energy; });
    real("ch_probability", [](RunSpec& s) -> double& { return s.network.ch_probability; });
    real("clustering_rate_cap", [](RunSpec& s) -> double& { return s.network.clustering_rate_cap; });
    real("tx_range", [](RunSpec& s) -> double& { return s.network.tx_range; });
    real("e_elec", [](RunSpec& s) -> double& { return s.radio.e_elec; });
    real("eps_fs", [](RunSpec& s) -> double& { return s.radio.eps_fs; });
    real("eps_amp", [](RunSpec& s) -> double& { return s.radio.eps_amp; });
    real("e_da", [](RunSpec& s) -> double& { return s.radio.e_da; });
    t.emplace("n_nodes", [](RunSpec& s, std::string_view v, std::size_t line) {
      s.network.n_nodes = parse_unsigned<std::size_t>("n_nodes", v, line);
    });
    t.emplace("packet_bits", [](RunSpec& s, std::string_view v, std::size_t line) {
      s.network.packet_bits = parse_unsigned<std::uint32_t>("packet_bits", v, line);
    });
    t.emplace("control_bits", [](RunSpec& s, std::string_view v, std::size_t line) {
      s.network.control_bits = parse_unsigned<std::uint32_t>("control_bits", v, line);
    });
    t.emplace("max_rounds", [](RunSpec& s, std::string_view v, std::size_t line) {
      s.network.max_rounds = parse_unsigned<RoundIndex>("max_rounds", v, line);
    });
    t.emplace("seed", [](RunSpec& s, std::string_view v, std::size_t line) {
      s.network.seed = parse_unsigned<std::uint64_t>("seed", v, line);
    });
    t.emplace("protocol", [](RunSpec& s, std::string_view v, std::size_t line) {
      auto mode = parse_run_mode(v);
      if (!mode) {
        line_error(line, "protocol: expected leach, oleach or compare, got '" + std::string(v) +
                             "'");
      }
      s.mode = *mode;
      s.network.protocol = *mode == RunMode::OLeach ? Protocol::OLeach : Protocol::Leach;
    });
    return t;
  }();
  return table;
}

}  // namespace

void validate(const RunSpec& spec) {
  validate(spec.network);
  validate(spec.radio);
}

RunSpec parse_config(std::string_view text) {
  RunSpec spec;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      line_error(line_no, "expected key=value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      line_error(line_no, "expected key=value");
    }
    const auto& table = setters();
    auto it = table.find(key);
    if (it == table.end()) {
      line_error(line_no, "unknown key '" + std::string(key) + "'");
    }
    if (!seen.emplace(key).second) {
      line_error(line_no, "duplicate key '" + std::string(key) + "'");
    }
    it->second(spec, value, line_no);
  }
  validate(spec);
  return spec;
}

RunSpec load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read config file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_config_text(const RunSpec& s) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(std::numeric_limits<double>::max_digits10);
  const NetworkConfig& n = s.network;
  out << "n_nodes=" << n.n_nodes << '\n'
      << "field_width=" << n.field_width << '\n'
      << "field_height=" << n.field_height << '\n'
      << "sink_x=" << n.sink_pos.x << '\n'
      << "sink_y=" << n.sink_pos.y << '\n'
      << "initial_energy=" << n.initial_energy << '\n'
      << "ch_probability=" << n.ch_probability << '\n'
      << "clustering_rate_cap=" << n.clustering_rate_cap << '\n'
      << "tx_range=" << n.tx_range << '\n'
      << "packet_bits=" << n.packet_bits << '\n'
      << "control_bits=" << n.control_bits << '\n'
      << "e_elec=" << s.radio.e_elec << '\n'
      << "eps_fs=" << s.radio.eps_fs << '\n'
      << "eps_amp=" << s.radio.eps_amp << '\n'
      << "e_da=" << s.radio.e_da << '\n'
      << "max_rounds=" << n.max_rounds << '\n'
      << "seed=" << n.seed << '\n'
      << "protocol=" << to_string(s.mode) << '\n';
  return out.str();
}

}  // namespace wsnsim
