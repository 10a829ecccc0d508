#include "doctest.h"
#include "oracle.hpp"
#include "wsnsim/net_model.hpp"
#include "wsnsim/radio_energy.hpp"

using namespace wsnsim;
using oracle::rel_err;

TEST_SUITE("radio_energy") {
  TEST_CASE("crossover distance") {
    RadioParams p;
    p.eps_fs = p.eps_amp = 3e-12;
    CHECK(crossover_distance(p) == 1.0);
    p.eps_fs = 4.0 * p.eps_amp;
    CHECK(crossover_distance(p) == 2.0);
    CHECK(rel_err(crossover_distance(RadioParams{}), 87.70580193070292) < 1e-12);
  }

  TEST_CASE("crossover rejects non-positive constants") {
    RadioParams p;
    p.eps_amp = 0.0;
    CHECK_THROWS_AS(crossover_distance(p), ConfigError);
    p = RadioParams{};
    p.eps_fs = -1.0;
    CHECK_THROWS_AS(crossover_distance(p), ConfigError);
  }

  TEST_CASE("tx_cost free-space and multipath branches") {
    const RadioParams p;
    CHECK(tx_cost(0, 123.0, p) == 0.0);
    CHECK(rel_err(tx_cost(2000, 50.0, p), 5.01e-5) < 1e-12);
    CHECK(rel_err(tx_cost(2000, 100.0, p), 2.601e-4) < 1e-12);
    CHECK(rel_err(tx_cost(2000, 0.0, p), 1.0e-7) < 1e-12);
  }

  TEST_CASE("tx_cost uses the multipath branch at exactly d0") {
    const RadioParams p;
    const double d0 = crossover_distance(p);
    const double multipath = 2000 * oracle::kElec + 2000 * oracle::kAmp * std::pow(d0, 4);
    CHECK(rel_err(tx_cost(2000, d0, p), multipath) < 1e-12);
  }

  TEST_CASE("tx_cost is continuous at d0") {
    const RadioParams p;
    const double d0 = crossover_distance(p);
    // The branches meet at d0 with slopes 2*l*eps_fs*d0 and 4*l*eps_amp*d0^3,
    // so the jump across [d0 - eps, d0 + eps] shrinks linearly with eps.
    const double slope_fs = 2.0 * 2000 * oracle::kFs * d0;
    const double slope_amp = 4.0 * 2000 * oracle::kAmp * d0 * d0 * d0;
    for (double eps : {1e-1, 1e-3, 1e-5, 1e-7}) {
      const double gap = std::abs(tx_cost(2000, d0 + eps, p) - tx_cost(2000, d0 - eps, p));
      CHECK(gap <= eps * (slope_fs + slope_amp) * 1.01 + 1e-18);
    }
  }

  TEST_CASE("tx_cost is monotone in distance and bits") {
    const RadioParams p;
    double prev = tx_cost(2000, 0.0, p);
    for (double d = 0.25; d < 500.0; d += 0.25) {
      const double c = tx_cost(2000, d, p);
      CHECK(c >= prev);
      prev = c;
    }
    for (std::uint64_t l = 1; l < 5000; l += 97) {
      CHECK(tx_cost(l + 1, 60.0, p) >= tx_cost(l, 60.0, p));
    }
  }

  TEST_CASE("rx_cost") {
    const RadioParams p;
    CHECK(rx_cost(0, p) == 0.0);
    CHECK(rel_err(rx_cost(2000, p), 1.0e-7) < 1e-12);
    CHECK(rel_err(rx_cost(1, p), 5.0e-11) < 1e-12);
  }

  TEST_CASE("aggregation_cost") {
    const RadioParams p;
    CHECK(aggregation_cost(2000, 0, p) == 0.0);
    CHECK(rel_err(aggregation_cost(2000, 1, p), 1.0e-8) < 1e-12);
    CHECK(rel_err(aggregation_cost(2000, 6, p), 6.0e-8) < 1e-12);
  }

  TEST_CASE("all costs are linear in bits") {
    const RadioParams p;
    for (std::uint64_t l : {1u, 200u, 2000u, 12345u}) {
      for (double d : {0.0, 10.0, 87.0, 88.0, 300.0}) {
        CHECK(rel_err(tx_cost(2 * l, d, p), 2.0 * tx_cost(l, d, p)) < 1e-12);
      }
      CHECK(rel_err(rx_cost(2 * l, p), 2.0 * rx_cost(l, p)) < 1e-12);
      CHECK(rel_err(aggregation_cost(2 * l, 3, p), 2.0 * aggregation_cost(l, 3, p)) < 1e-12);
    }
  }
}
