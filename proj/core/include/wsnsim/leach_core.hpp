#pragma once

// Baseline LEACH round: threshold election, nearest-head clustering, TDMA
// frames and the steady-state data flow with energy accounting.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "wsnsim/net_model.hpp"
#include "wsnsim/radio_energy.hpp"

namespace wsnsim {

/// Number of rounds in an election epoch: 1/P rounded to the nearest integer (at least 1).
std::uint64_t epoch_length(double ch_probability);

/// Election threshold T(n) for a node, clamped to [0, 1]. Zero outside G.
double threshold(double ch_probability, RoundIndex round, bool in_g);

/// Draws one uniform number per alive node in ascending id order and elects
/// the node when the draw is below its threshold and fewer than
/// ceil(TR * alive) heads have been elected so far. Elected nodes leave G;
/// G is refilled with every alive node when it has no alive member left.
/// Returns the heads in ascending id order.
std::vector<NodeId> elect_cluster_heads(Network& net, RoundIndex round);

struct ClusterAssignment {
  std::vector<NodeId> heads;            // ascending
  std::map<NodeId, NodeId> membership;  // member -> head
  std::vector<NodeId> unassigned;       // ascending; no head within range

  [[nodiscard]] std::vector<NodeId> members_of(NodeId head) const;
  [[nodiscard]] bool is_head(NodeId id) const;
};

/// Joins every alive non-head to its nearest head within tx_range (ties go to
/// the lower head id). Charges each head one ADV broadcast at tx_range, then
/// each join message (member tx to its head, head rx).
ClusterAssignment form_clusters(Network& net, std::span<const NodeId> heads,
                                const RadioParams& radio, EnergyLedger& ledger);

enum class SlotKind : std::uint8_t { Data, Relay };

struct Slot {
  NodeId sender = 0;
  SlotKind kind = SlotKind::Data;

  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Frame {
  std::vector<Slot> slots;  // slot index -> sender

  [[nodiscard]] std::size_t frame_length() const { return slots.size(); }
  friend bool operator==(const Frame&, const Frame&) = default;
};

struct TdmaSchedule {
  std::map<NodeId, Frame> head_frames;  // keyed by cluster head
  std::map<NodeId, Frame> sub_frames;   // keyed by sub-cluster head

  friend bool operator==(const TdmaSchedule&, const TdmaSchedule&) = default;
};

/// One data slot per member, members in ascending id order. Every head gets a
/// frame, possibly empty.
TdmaSchedule build_tdma_schedule(const ClusterAssignment& assignment);

struct RoundReport {
  EnergyLedger energy;
  std::size_t packets_to_bs = 0;      // one per head that reached the sink
  std::size_t sources_delivered = 0;  // distinct nodes whose reading reached the sink

  RoundReport() = default;
  explicit RoundReport(std::size_t n_nodes) : energy(n_nodes) {}
};

/// Aggregates waiting at a gateway for its relay slot: gateway -> number of
/// source readings fused into the aggregate.
using RelayBuffer = std::map<NodeId, std::size_t>;

/// Plays every head frame. Each sender pays tx to its head, the head pays rx per
/// received packet, fuses received + 1 signals and sends one packet to the
/// sink. Relay slots transmit only when `relays` holds an aggregate for the
/// sender. Unassigned nodes send nothing.
void run_cluster_frames(Network& net, const ClusterAssignment& assignment,
                        const TdmaSchedule& schedule, const RadioParams& radio,
                        const RelayBuffer& relays, RoundReport& report);

void run_steady_state_leach(Network& net, const ClusterAssignment& assignment,
                            const TdmaSchedule& schedule, const RadioParams& radio,
                            RoundReport& report);

}  // namespace wsnsim
