#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "doctest.h"
#include "wsnsim/config.hpp"

using namespace wsnsim;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& s, std::string_view part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_SUITE("config.parse") {
  TEST_CASE("empty text gives the reference defaults") {
    const RunSpec s = parse_config("");
    CHECK(s.network.n_nodes == 500);
    CHECK(s.network.field_width == 300.0);
    CHECK(s.network.field_height == 300.0);
    CHECK(s.network.sink_pos == Position{0, 0});
    CHECK(s.network.initial_energy == 0.5);
    CHECK(s.network.ch_probability == 0.1);
    CHECK(s.network.clustering_rate_cap == 0.1);
    CHECK(s.network.tx_range == 70.0);
    CHECK(s.network.packet_bits == 2000);
    CHECK(s.network.control_bits == 200);
    CHECK(s.network.max_rounds == 2000);
    CHECK(s.radio.e_elec == 50e-12);
    CHECK(s.radio.eps_fs == 10e-12);
    CHECK(s.radio.eps_amp == 0.0013e-12);
    CHECK(s.radio.e_da == 5e-12);
    CHECK(s.mode == RunMode::Leach);
  }

  TEST_CASE("comments, blank lines and whitespace") {
    const RunSpec s = parse_config(
        "# header\n"
        "\n"
        "  n_nodes = 100  # trailing\n"
        "tx_range=50\r\n"
        "protocol = compare\n");
    CHECK(s.network.n_nodes == 100);
    CHECK(s.network.tx_range == 50.0);
    CHECK(s.compare());
  }

  TEST_CASE("every key is accepted") {
    const RunSpec s = parse_config(
        "n_nodes=10\nfield_width=100\nfield_height=50\nsink_x=50\nsink_y=175\n"
        "initial_energy=2\nch_probability=0.05\nclustering_rate_cap=0.2\ntx_range=30\n"
        "packet_bits=4000\ncontrol_bits=100\ne_elec=4e-11\neps_fs=1e-11\neps_amp=1.3e-15\n"
        "e_da=6e-12\nmax_rounds=99\nseed=12345678901234\nprotocol=oleach\n");
    CHECK(s.network.n_nodes == 10);
    CHECK(s.network.field_width == 100.0);
    CHECK(s.network.field_height == 50.0);
    CHECK(s.network.sink_pos == Position{50, 175});
    CHECK(s.network.initial_energy == 2.0);
    CHECK(s.network.ch_probability == 0.05);
    CHECK(s.network.clustering_rate_cap == 0.2);
    CHECK(s.network.tx_range == 30.0);
    CHECK(s.network.packet_bits == 4000);
    CHECK(s.network.control_bits == 100);
    CHECK(s.radio.e_elec == 4e-11);
    CHECK(s.radio.eps_fs == 1e-11);
    CHECK(s.radio.eps_amp == 1.3e-15);
    CHECK(s.radio.e_da == 6e-12);
    CHECK(s.network.max_rounds == 99);
    CHECK(s.network.seed == 12345678901234ULL);
    CHECK(s.mode == RunMode::OLeach);
    CHECK(s.network.protocol == Protocol::OLeach);
  }

  TEST_CASE("out-of-range values name the field") {
    CHECK(contains(error_of("ch_probability=1.5"), "ch_probability"));
    CHECK(contains(error_of("ch_probability=0"), "ch_probability"));
    CHECK(error_of("n_nodes=0").empty());
    CHECK(contains(error_of("n_nodes=-4"), "n_nodes"));
    CHECK(contains(error_of("tx_range=-1"), "tx_range"));
    CHECK(contains(error_of("initial_energy=0"), "initial_energy"));
    CHECK(contains(error_of("clustering_rate_cap=1.01"), "clustering_rate_cap"));
    CHECK(contains(error_of("eps_amp=0"), "eps_amp"));
    CHECK(contains(error_of("field_width=-3"), "field_width"));
    CHECK(contains(error_of("packet_bits=0"), "packet_bits"));
  }

  TEST_CASE("syntax errors name the line") {
    CHECK(contains(error_of("n_nodes=10\nthis line is wrong\n"), "line 2"));
    CHECK(contains(error_of("\n\ntx_range=abc"), "line 3"));
    CHECK(contains(error_of("tx_range=70m"), "line 1"));
    CHECK(contains(error_of("=5"), "line 1"));
    CHECK(contains(error_of("n_nodes="), "line 1"));
    CHECK(contains(error_of("protocol=flooding"), "protocol"));
    CHECK(contains(error_of("tx_range=nan"), "line 1"));
  }

  TEST_CASE("unknown and repeated keys") {
    const auto unknown = error_of("n_nodes=10\nradius=5\n");
    CHECK(contains(unknown, "radius"));
    CHECK(contains(unknown, "line 2"));
    const auto dup = error_of("seed=1\nseed=2\n");
    CHECK(contains(dup, "seed"));
    CHECK(contains(dup, "line 2"));
  }

  TEST_CASE("run modes") {
    CHECK(parse_run_mode("leach") == RunMode::Leach);
    CHECK(parse_run_mode("oleach") == RunMode::OLeach);
    CHECK(parse_run_mode("compare") == RunMode::Compare);
    CHECK_FALSE(parse_run_mode("LEACH"));
    CHECK_FALSE(parse_run_mode(""));
  }
}

TEST_SUITE("config.roundtrip") {
  TEST_CASE("defaults survive a render and re-parse") {
    const RunSpec a = parse_config("");
    const RunSpec b = parse_config(to_config_text(a));
    CHECK(a.network == b.network);
    CHECK(a.radio == b.radio);
    CHECK(a.mode == b.mode);
  }

  TEST_CASE("random valid specs survive a render and re-parse") {
    std::mt19937_64 eng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
      RunSpec s;
      s.network.n_nodes = 1 + eng() % 1000;
      s.network.field_width = 1.0 + unit(eng) * 1000.0;
      s.network.field_height = 1.0 + unit(eng) * 1000.0;
      s.network.sink_pos = {unit(eng) * 500.0 - 100.0, unit(eng) * 500.0};
      s.network.initial_energy = 0.01 + unit(eng);
      s.network.ch_probability = 0.01 + unit(eng) * 0.98;
      s.network.clustering_rate_cap = 0.01 + unit(eng) * 0.99;
      s.network.tx_range = 1.0 + unit(eng) * 200.0;
      s.network.packet_bits = 1 + static_cast<std::uint32_t>(eng() % 10000);
      s.network.control_bits = 1 + static_cast<std::uint32_t>(eng() % 1000);
      s.network.max_rounds = eng() % 100000;
      s.network.seed = eng();
      s.radio.e_elec = 1e-12 + unit(eng) * 1e-10;
      s.radio.eps_fs = 1e-13 + unit(eng) * 1e-10;
      s.radio.eps_amp = 1e-16 + unit(eng) * 1e-14;
      s.radio.e_da = 1e-13 + unit(eng) * 1e-11;
      s.mode = static_cast<RunMode>(eng() % 3);
      s.network.protocol = s.mode == RunMode::OLeach ? Protocol::OLeach : Protocol::Leach;
      const RunSpec back = parse_config(to_config_text(s));
      CHECK(back.network == s.network);
      CHECK(back.radio == s.radio);
      CHECK(back.mode == s.mode);
    }
  }
}

TEST_SUITE("config.load") {
  TEST_CASE("missing file is an I/O error") {
    CHECK_THROWS_AS(load_config("/nonexistent/dir/run.cfg"), IoError);
  }

  TEST_CASE("reads a file") {
    const auto path = std::filesystem::temp_directory_path() / "wsnsim_config_test.cfg";
    {
      std::ofstream out(path);
      out << "n_nodes=42\nprotocol=oleach\n";
    }
    const RunSpec s = load_config(path);
    CHECK(s.network.n_nodes == 42);
    CHECK(s.mode == RunMode::OLeach);
    std::filesystem::remove(path);
  }
}
