#pragma once

// Round loop. Each round:
//   elect heads -> form clusters -> [O-LEACH: orphans -> gateway handshake ->
//   CH' election -> extended TDMA] -> steady state -> metrics
// The run stops after max_rounds or once every node is dead.

#include <optional>
#include <vector>

#include "wsnsim/config.hpp"
#include "wsnsim/leach_core.hpp"
#include "wsnsim/metrics_trace.hpp"
#include "wsnsim/net_model.hpp"
#include "wsnsim/oleach_ext.hpp"
#include "wsnsim/radio_energy.hpp"

namespace wsnsim {

/// Everything decided and measured in one round.
struct RoundState {
  RoundIndex round = 0;
  std::size_t participants = 0;  // alive at the start of the round
  ClusterAssignment assignment;
  TdmaSchedule schedule;
  std::vector<NodeId> orphans;
  HandshakeResult handshake;
  OrphanReport orphan_report;
  RoundReport report;
  RoundMetrics metrics;
};

/// Throws InvariantError if the round breaks a structural rule: the cluster
/// partition, member and sub-cluster hop ranges, slot uniqueness, or the
/// gateway bound.
void check_round_invariants(const Network& net, const RoundState& state);

class Simulation {
 public:
  Simulation(const NetworkConfig& config, const RadioParams& radio);

  /// Runs the next round. Returns false, doing nothing, once the run is over.
  bool step();
  [[nodiscard]] bool finished() const { return termination_.has_value(); }

  [[nodiscard]] const Network& network() const { return net_; }
  [[nodiscard]] const RoundState& last_round() const { return last_; }
  [[nodiscard]] const SimulationTrace& trace() const { return builder_.trace(); }

  /// Runs to completion and returns the trace.
  SimulationTrace run() &&;

 private:
  Network net_;
  RadioParams radio_;
  TraceBuilder builder_;
  RoundState last_;
  RoundIndex next_round_ = 0;
  std::optional<Termination> termination_;
};

SimulationTrace simulate(const NetworkConfig& config, const RadioParams& radio);

/// One trace per protocol requested: [leach], [oleach], or [leach, oleach]
/// for comparison, both started from the same config and seed.
std::vector<SimulationTrace> run_simulation(const RunSpec& spec);

}  // namespace wsnsim
