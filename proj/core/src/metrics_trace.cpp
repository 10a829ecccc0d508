#include "wsnsim/metrics_trace.hpp"

#include <string>
#include <utility>

namespace wsnsim {

RoundMetrics compute_round_metrics(const Network& net, RoundIndex round, std::size_t participants,
                                   const ClusterAssignment& assignment, const OrphanReport& orphans,
                                   const RoundReport& report) {
  RoundMetrics m;
  m.round = round;
  m.alive = net.alive_count();
  m.heads = assignment.heads.size();
  m.orphans_total = orphans.total_orphans;
  m.orphans_recovered = orphans.recovered;
  m.gateways = orphans.gateways;
  if (participants > 0) {
    const double n = static_cast<double>(participants);
    const auto connected = assignment.heads.size() + assignment.membership.size() + orphans.recovered;
    m.connectivity_rate = static_cast<double>(connected) / n;
    m.coverage_rate = static_cast<double>(report.sources_delivered) / n;
  }
  m.energy_dissipated = report.energy.total();
  m.energy_remaining = net.residual_energy();
  m.packets_to_bs = report.packets_to_bs;
  m.sources_delivered = report.sources_delivered;
  return m;
}

const char* to_string(Termination t) {
  return t == Termination::MaxRounds ? "max_rounds" : "all_dead";
}

TraceBuilder::TraceBuilder(NetworkConfig config, RadioParams radio) {
  trace_.config = std::move(config);
  trace_.radio = radio;
}

void TraceBuilder::push(const RoundMetrics& m) {
  auto& rounds = trace_.rounds;
  if (m.round != rounds.size()) {
    throw InvariantError("trace: expected round " + std::to_string(rounds.size()) + ", got " +
                         std::to_string(m.round));
  }
  if (!rounds.empty()) {
    const RoundMetrics& prev = rounds.back();
    if (m.alive > prev.alive) {
      throw InvariantError("trace: alive count increased at round " + std::to_string(m.round));
    }
    if (m.energy_remaining > prev.energy_remaining) {
      throw InvariantError("trace: residual energy increased at round " + std::to_string(m.round));
    }
  }

  const std::size_t n = trace_.config.n_nodes;
  Lifetime& life = trace_.lifetime;
  if (!life.first_node_death && m.alive < n) life.first_node_death = m.round;
  if (!life.half_alive && 2 * m.alive <= n) life.half_alive = m.round;
  if (!life.last_node_death && m.alive == 0) life.last_node_death = m.round;
  rounds.push_back(m);
}

SimulationTrace TraceBuilder::finish(Termination termination) && {
  trace_.termination = termination;
  return std::move(trace_);
}

SimulationTrace accumulate_trace(const NetworkConfig& config, const RadioParams& radio,
                                 std::span<const RoundMetrics> metrics, Termination termination) {
  TraceBuilder builder(config, radio);
  for (const RoundMetrics& m : metrics) {
    builder.push(m);
  }
  return std::move(builder).finish(termination);
}

}  // namespace wsnsim
