#include "doctest.h"
#include "fixtures.hpp"
#include "wsnsim/metrics_trace.hpp"

using namespace wsnsim;
using fixtures::make_network;

namespace {

RoundMetrics row(RoundIndex r, std::size_t alive, double remaining) {
  RoundMetrics m;
  m.round = r;
  m.alive = alive;
  m.energy_remaining = remaining;
  return m;
}

NetworkConfig sized(std::size_t n) {
  NetworkConfig c;
  c.n_nodes = n;
  return c;
}

}  // namespace

TEST_SUITE("metrics.round") {
  TEST_CASE("counts heads, members and recovered orphans") {
    Network net = make_network({{0, 0}, {10, 0}, {20, 0}, {200, 200}, {210, 200}});
    ClusterAssignment a;
    a.heads = {0};
    a.membership = {{1, 0}, {2, 0}};
    a.unassigned = {3, 4};
    OrphanReport orphans{.total_orphans = 2, .recovered = 1, .unreachable = 1, .gateways = 1};
    RoundReport rep(5);
    rep.sources_delivered = 4;
    rep.packets_to_bs = 1;
    rep.energy.charge(net, 0, 0.01);

    const auto m = compute_round_metrics(net, 7, 5, a, orphans, rep);
    CHECK(m.round == 7);
    CHECK(m.alive == 5);
    CHECK(m.heads == 1);
    CHECK(m.orphans_total == 2);
    CHECK(m.orphans_recovered == 1);
    CHECK(m.gateways == 1);
    CHECK(m.connectivity_rate == doctest::Approx(4.0 / 5.0));
    CHECK(m.coverage_rate == doctest::Approx(4.0 / 5.0));
    CHECK(m.energy_dissipated == doctest::Approx(0.01));
    CHECK(m.energy_remaining == doctest::Approx(2.49));
    CHECK(m.packets_to_bs == 1);
  }

  TEST_CASE("100 participants, 10 orphans all recovered: connectivity 1") {
    std::vector<Position> pos(100, Position{1, 1});
    Network net = make_network(pos);
    ClusterAssignment a;
    a.heads = {0, 1, 2, 3, 4};
    for (NodeId i = 5; i < 90; ++i) a.membership[i] = 0;
    for (NodeId i = 90; i < 100; ++i) a.unassigned.push_back(i);
    OrphanReport orphans{.total_orphans = 10, .recovered = 10, .unreachable = 0, .gateways = 3};
    const auto m = compute_round_metrics(net, 0, 100, a, orphans, RoundReport(100));
    CHECK(m.connectivity_rate == 1.0);
  }

  TEST_CASE("no participants: rates are zero") {
    Network net = make_network({{0, 0}});
    debit_energy(net.at(0), 1.0);
    const auto m = compute_round_metrics(net, 3, 0, ClusterAssignment{}, OrphanReport{},
                                         RoundReport(1));
    CHECK(m.alive == 0);
    CHECK(m.connectivity_rate == 0.0);
    CHECK(m.coverage_rate == 0.0);
    CHECK(m.energy_remaining == 0.0);
  }

  TEST_CASE("rates use the start-of-round count even if nodes die during the round") {
    Network net = make_network({{0, 0}, {10, 0}});
    ClusterAssignment a;
    a.heads = {0};
    a.membership = {{1, 0}};
    debit_energy(net.at(1), 1.0);
    RoundReport rep(2);
    rep.sources_delivered = 1;
    const auto m = compute_round_metrics(net, 0, 2, a, OrphanReport{}, rep);
    CHECK(m.alive == 1);
    CHECK(m.connectivity_rate == 1.0);
    CHECK(m.coverage_rate == 0.5);
  }
}

TEST_SUITE("metrics.trace") {
  TEST_CASE("empty stream") {
    const auto t = accumulate_trace(sized(10), RadioParams{}, {}, Termination::MaxRounds);
    CHECK(t.rounds.empty());
    CHECK_FALSE(t.lifetime.first_node_death);
    CHECK_FALSE(t.lifetime.half_alive);
    CHECK_FALSE(t.lifetime.last_node_death);
    CHECK(t.termination == Termination::MaxRounds);
  }

  TEST_CASE("first death is the first round ending below N") {
    std::vector<RoundMetrics> rows;
    for (RoundIndex r = 0; r < 60; ++r) {
      rows.push_back(row(r, r < 37 ? 100 : 99, 50.0 - static_cast<double>(r) * 0.1));
    }
    const auto t = accumulate_trace(sized(100), RadioParams{}, rows, Termination::MaxRounds);
    CHECK(t.lifetime.first_node_death == RoundIndex{37});
    CHECK_FALSE(t.lifetime.half_alive);
    CHECK_FALSE(t.lifetime.last_node_death);
  }

  TEST_CASE("half and last milestones") {
    const std::vector<RoundMetrics> rows{row(0, 10, 5), row(1, 6, 4), row(2, 5, 3), row(3, 5, 3),
                                         row(4, 0, 0)};
    const auto t = accumulate_trace(sized(10), RadioParams{}, rows, Termination::AllDead);
    CHECK(t.lifetime.first_node_death == RoundIndex{1});
    CHECK(t.lifetime.half_alive == RoundIndex{2});
    CHECK(t.lifetime.last_node_death == RoundIndex{4});
    CHECK(t.termination == Termination::AllDead);
  }

  TEST_CASE("several milestones can fall in one round") {
    const std::vector<RoundMetrics> rows{row(0, 0, 0)};
    const auto t = accumulate_trace(sized(4), RadioParams{}, rows, Termination::AllDead);
    CHECK(t.lifetime.first_node_death == RoundIndex{0});
    CHECK(t.lifetime.half_alive == RoundIndex{0});
    CHECK(t.lifetime.last_node_death == RoundIndex{0});
  }

  TEST_CASE("odd N: half means alive <= N/2") {
    const std::vector<RoundMetrics> rows{row(0, 3, 1), row(1, 2, 1)};
    const auto t = accumulate_trace(sized(5), RadioParams{}, rows, Termination::MaxRounds);
    CHECK(t.lifetime.half_alive == RoundIndex{1});
  }

  TEST_CASE("rejects rounds out of order") {
    TraceBuilder b(sized(3), RadioParams{});
    b.push(row(0, 3, 1));
    CHECK_THROWS_AS(b.push(row(2, 3, 1)), InvariantError);
    CHECK_THROWS_AS(b.push(row(0, 3, 1)), InvariantError);
    CHECK(b.trace().rounds.size() == 1);
  }

  TEST_CASE("rejects a rising alive count or residual energy") {
    TraceBuilder b(sized(3), RadioParams{});
    b.push(row(0, 2, 1.0));
    CHECK_THROWS_AS(b.push(row(1, 3, 1.0)), InvariantError);
    CHECK_THROWS_AS(b.push(row(1, 2, 1.5)), InvariantError);
    b.push(row(1, 2, 1.0));
    CHECK(b.trace().rounds.size() == 2);
  }

  TEST_CASE("termination names") {
    CHECK(std::string(to_string(Termination::MaxRounds)) == "max_rounds");
    CHECK(std::string(to_string(Termination::AllDead)) == "all_dead");
  }
}
