#pragma once

// O-LEACH orphan recovery. After clustering, alive nodes with no head in range
// (orphans) look for a cluster member in range. That member becomes a gateway;
// the orphan nearest to it becomes the sub-cluster head (CH') and collects the
// other orphans' readings. The CH' aggregate travels CH' -> gateway -> CH -> sink,
// the gateway using one extra slot in its head's frame.
//
// Control exchange per round, all messages control_bits long:
//   1. every orphan broadcasts a status at tx_range; every cluster member in
//      range receives it
//   2. every gateway answers "I am a gateway" at tx_range; its attached
//      orphans receive it
//   3. every attached orphan sends a join to its gateway
//   4. the gateway tells its head how many slots to reserve
//   5. the head adds the relay slot to its frame (no message)
//   6. the gateway sends the slot notification to CH', which broadcasts its
//      sub-frame at tx_range to its members

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wsnsim/leach_core.hpp"
#include "wsnsim/net_model.hpp"
#include "wsnsim/radio_energy.hpp"

namespace wsnsim {

struct SubCluster {
  NodeId gateway = 0;
  NodeId parent_head = 0;
  std::optional<NodeId> head_prime;  // set by elect_sub_cluster_head
  // Before CH' election: every orphan attached to the gateway. After: the
  // orphans within range of CH', CH' excluded, ascending.
  std::vector<NodeId> members;
  // Attached to the gateway but out of CH' range; unrecovered this round.
  std::vector<NodeId> dropped;
  // Slots in the CH' sub-frame, one per member.
  std::size_t reserved_slots = 0;

  [[nodiscard]] std::size_t recovered() const { return head_prime ? members.size() + 1 : 0; }
};

struct OrphanReport {
  std::size_t total_orphans = 0;
  std::size_t recovered = 0;
  std::size_t unreachable = 0;
  std::size_t gateways = 0;
};

struct HandshakeResult {
  std::vector<SubCluster> subs;     // one per gateway, ascending gateway id
  std::vector<NodeId> unreachable;  // orphans that heard no cluster member
};

/// The alive unassigned nodes, ascending.
std::vector<NodeId> detect_orphans(const Network& net, const ClusterAssignment& assignment);

/// Steps 1-3 of the exchange. Each orphan attaches to the nearest cluster
/// member within tx_range (ties to the lower id); that member becomes a gateway.
HandshakeResult gateway_handshake(Network& net, const ClusterAssignment& assignment,
                                  std::span<const NodeId> orphans, const RadioParams& radio,
                                  EnergyLedger& ledger);

/// Picks CH' as the attached orphan nearest the gateway (ties to the lower id),
/// keeps the other orphans within tx_range of CH' as members and moves the
/// rest to `dropped`. Throws InvariantError on an empty sub-cluster.
NodeId elect_sub_cluster_head(SubCluster& sub, Network& net);

/// Adds one relay slot for each gateway to its head's frame and builds a
/// sub-frame under each CH' (members ascending). Pure.
TdmaSchedule extend_tdma(const TdmaSchedule& schedule, std::span<const SubCluster> subs);

/// Steps 4 and 6 of the exchange: slot-count message to the head, slot
/// notification to CH', CH' sub-frame broadcast.
void charge_slot_reservation(Network& net, std::span<const SubCluster> subs,
                             const RadioParams& radio, EnergyLedger& ledger);

/// Sub-frames first (orphan -> CH', CH' fuses and sends to its gateway), then
/// every head frame with relay slots carrying the CH' aggregates.
void run_steady_state_oleach(Network& net, const ClusterAssignment& assignment,
                             const TdmaSchedule& schedule, std::span<const SubCluster> subs,
                             const RadioParams& radio, RoundReport& report);

OrphanReport summarize_orphans(std::size_t total_orphans, std::span<const SubCluster> subs);

}  // namespace wsnsim
