#pragma once

// Per-round metrics and whole-run traces.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wsnsim/leach_core.hpp"
#include "wsnsim/net_model.hpp"
#include "wsnsim/oleach_ext.hpp"
#include "wsnsim/radio_energy.hpp"

namespace wsnsim {

struct RoundMetrics {
  RoundIndex round = 0;
  std::size_t alive = 0;  // at the end of the round
  std::size_t heads = 0;
  std::size_t orphans_total = 0;
  std::size_t orphans_recovered = 0;
  std::size_t gateways = 0;
  double connectivity_rate = 0.0;
  double coverage_rate = 0.0;
  double energy_dissipated = 0.0;
  double energy_remaining = 0.0;
  std::size_t packets_to_bs = 0;
  std::size_t sources_delivered = 0;

  friend bool operator==(const RoundMetrics&, const RoundMetrics&) = default;
};

/// Rates are taken over `participants`, the nodes alive when the round
/// started; both are 0 when no node took part.
///   connectivity = (heads + members + recovered orphans) / participants
///   coverage     = sources delivered to the sink / participants
RoundMetrics compute_round_metrics(const Network& net, RoundIndex round, std::size_t participants,
                                   const ClusterAssignment& assignment, const OrphanReport& orphans,
                                   const RoundReport& report);

enum class Termination : std::uint8_t { MaxRounds, AllDead };

const char* to_string(Termination t);

struct Lifetime {
  std::optional<RoundIndex> first_node_death;  // first round ending with alive < N
  std::optional<RoundIndex> half_alive;        // first round ending with alive <= N/2
  std::optional<RoundIndex> last_node_death;   // first round ending with alive == 0
};

struct SimulationTrace {
  NetworkConfig config;
  RadioParams radio;
  std::vector<RoundMetrics> rounds;
  Termination termination = Termination::MaxRounds;
  Lifetime lifetime;
};

/// Appends rounds in order and tracks lifetime milestones. push() throws
/// InvariantError if the round index is not the next one, or if alive or
/// energy_remaining increase.
class TraceBuilder {
 public:
  TraceBuilder(NetworkConfig config, RadioParams radio);

  void push(const RoundMetrics& m);
  [[nodiscard]] const SimulationTrace& trace() const { return trace_; }
  SimulationTrace finish(Termination termination) &&;

 private:
  SimulationTrace trace_;
};

SimulationTrace accumulate_trace(const NetworkConfig& config, const RadioParams& radio,
                                 std::span<const RoundMetrics> metrics, Termination termination);

}  // namespace wsnsim
