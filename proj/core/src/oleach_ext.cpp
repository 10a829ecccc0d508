#include "wsnsim/oleach_ext.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace wsnsim {

std::vector<NodeId> detect_orphans(const Network& net, const ClusterAssignment& assignment) {
  std::vector<NodeId> out;
  for (NodeId id : assignment.unassigned) {
    if (net.at(id).alive) {
      out.push_back(id);
    }
  }
  return out;
}

HandshakeResult gateway_handshake(Network& net, const ClusterAssignment& assignment,
                                  std::span<const NodeId> orphans, const RadioParams& radio,
                                  EnergyLedger& ledger) {
  HandshakeResult result;
  const double range = net.config.tx_range;
  const auto ctrl = net.config.control_bits;

  std::vector<NodeId> candidates;
  for (const auto& [member, head] : assignment.membership) {
    if (net.at(member).alive) {
      candidates.push_back(member);
    }
  }

  std::map<NodeId, std::vector<NodeId>> attached;  // gateway -> orphans
  std::vector<NodeId> sorted_orphans(orphans.begin(), orphans.end());
  std::sort(sorted_orphans.begin(), sorted_orphans.end());

  for (NodeId o : sorted_orphans) {
    const Position pos = net.at(o).pos;
    std::optional<NodeId> best;
    double best_d = std::numeric_limits<double>::infinity();
    for (NodeId m : candidates) {
      const double d = distance(pos, net.at(m).pos);
      if (d <= range && d < best_d) {
        best = m;
        best_d = d;
      }
    }
    if (best) {
      attached[*best].push_back(o);
    } else {
      result.unreachable.push_back(o);
    }
  }

  // 1. status broadcast, heard by every candidate in range
  for (NodeId o : sorted_orphans) {
    if (!ledger.charge(net, o, tx_cost(ctrl, range, radio))) {
      continue;
    }
    const Position pos = net.at(o).pos;
    for (NodeId m : candidates) {
      if (distance(pos, net.at(m).pos) <= range) {
        ledger.charge(net, m, rx_cost(ctrl, radio));
      }
    }
  }
  // 2. gateway reply
  for (const auto& [gateway, group] : attached) {
    if (!ledger.charge(net, gateway, tx_cost(ctrl, range, radio))) {
      continue;
    }
    for (NodeId o : group) {
      ledger.charge(net, o, rx_cost(ctrl, radio));
    }
  }
  // 3. join
  for (const auto& [gateway, group] : attached) {
    const Position gpos = net.at(gateway).pos;
    for (NodeId o : group) {
      if (ledger.charge(net, o, tx_cost(ctrl, distance(net.at(o).pos, gpos), radio))) {
        ledger.charge(net, gateway, rx_cost(ctrl, radio));
      }
    }
  }

  for (auto& [gateway, group] : attached) {
    SubCluster sub;
    sub.gateway = gateway;
    sub.parent_head = assignment.membership.at(gateway);
    sub.members = std::move(group);
    Node& g = net.at(gateway);
    if (g.alive) {
      g.role = Role::Gateway;
    }
    result.subs.push_back(std::move(sub));
  }
  return result;
}

NodeId elect_sub_cluster_head(SubCluster& sub, Network& net) {
  if (sub.members.empty()) {
    throw InvariantError("elect_sub_cluster_head: gateway " + std::to_string(sub.gateway) +
                         " has no orphans");
  }
  const Position gpos = net.at(sub.gateway).pos;
  NodeId chosen = sub.members.front();
  double best_d = std::numeric_limits<double>::infinity();
  for (NodeId o : sub.members) {
    const double d = distance(net.at(o).pos, gpos);
    if (d < best_d || (d == best_d && o < chosen)) {
      chosen = o;
      best_d = d;
    }
  }

  const Position hpos = net.at(chosen).pos;
  std::vector<NodeId> kept;
  for (NodeId o : sub.members) {
    if (o == chosen) {
      continue;
    }
    if (distance(net.at(o).pos, hpos) <= net.config.tx_range) {
      kept.push_back(o);
    } else {
      sub.dropped.push_back(o);
    }
  }
  std::sort(kept.begin(), kept.end());
  std::sort(sub.dropped.begin(), sub.dropped.end());
  sub.members = std::move(kept);
  sub.head_prime = chosen;
  sub.reserved_slots = sub.members.size();

  Node& h = net.at(chosen);
  if (h.alive) {
    h.role = Role::SubClusterHead;
  }
  return chosen;
}

TdmaSchedule extend_tdma(const TdmaSchedule& schedule, std::span<const SubCluster> subs) {
  TdmaSchedule out = schedule;
  for (const SubCluster& sub : subs) {
    if (!sub.head_prime) {
      throw InvariantError("extend_tdma: sub-cluster of gateway " + std::to_string(sub.gateway) +
                           " has no head");
    }
    auto it = out.head_frames.find(sub.parent_head);
    if (it == out.head_frames.end()) {
      throw InvariantError("extend_tdma: no frame for head " + std::to_string(sub.parent_head));
    }
    auto& slots = it->second.slots;
    // The relay slot sits just before the gateway's own data slot.
    auto own = std::find(slots.begin(), slots.end(), Slot{sub.gateway, SlotKind::Data});
    if (own == slots.end()) {
      throw InvariantError("extend_tdma: gateway " + std::to_string(sub.gateway) +
                           " has no slot in its head's frame");
    }
    slots.insert(own, Slot{sub.gateway, SlotKind::Relay});

    Frame& sub_frame = out.sub_frames[*sub.head_prime];
    for (NodeId m : sub.members) {
      sub_frame.slots.push_back({m, SlotKind::Data});
    }
  }
  return out;
}

void charge_slot_reservation(Network& net, std::span<const SubCluster> subs,
                             const RadioParams& radio, EnergyLedger& ledger) {
  const auto ctrl = net.config.control_bits;
  for (const SubCluster& sub : subs) {
    if (!sub.head_prime) {
      continue;
    }
    const Position gpos = net.at(sub.gateway).pos;
    const Position hpos = net.at(sub.parent_head).pos;
    const Position ppos = net.at(*sub.head_prime).pos;
    if (ledger.charge(net, sub.gateway, tx_cost(ctrl, distance(gpos, hpos), radio))) {
      ledger.charge(net, sub.parent_head, rx_cost(ctrl, radio));
    }
    if (ledger.charge(net, sub.gateway, tx_cost(ctrl, distance(gpos, ppos), radio))) {
      ledger.charge(net, *sub.head_prime, rx_cost(ctrl, radio));
    }
    if (ledger.charge(net, *sub.head_prime, tx_cost(ctrl, net.config.tx_range, radio))) {
      for (NodeId m : sub.members) {
        ledger.charge(net, m, rx_cost(ctrl, radio));
      }
    }
  }
}

void run_steady_state_oleach(Network& net, const ClusterAssignment& assignment,
                             const TdmaSchedule& schedule, std::span<const SubCluster> subs,
                             const RadioParams& radio, RoundReport& report) {
  const auto l = net.config.packet_bits;
  EnergyLedger& ledger = report.energy;
  RelayBuffer relays;
  for (const SubCluster& sub : subs) {
    if (!sub.head_prime) {
      continue;
    }
    const NodeId hp = *sub.head_prime;
    const Position hpos = net.at(hp).pos;
    std::uint64_t received = 0;
    if (auto it = schedule.sub_frames.find(hp); it != schedule.sub_frames.end()) {
      for (const Slot& slot : it->second.slots) {
        const double d = distance(net.at(slot.sender).pos, hpos);
        if (ledger.charge(net, slot.sender, tx_cost(l, d, radio)) &&
            ledger.charge(net, hp, rx_cost(l, radio))) {
          ++received;
        }
      }
    }
    if (!ledger.charge(net, hp, aggregation_cost(l, received + 1, radio))) {
      continue;
    }
    const double to_gateway = distance(hpos, net.at(sub.gateway).pos);
    if (ledger.charge(net, hp, tx_cost(l, to_gateway, radio)) &&
        ledger.charge(net, sub.gateway, rx_cost(l, radio))) {
      relays[sub.gateway] = static_cast<std::size_t>(received) + 1;
    }
  }
  run_cluster_frames(net, assignment, schedule, radio, relays, report);
}

OrphanReport summarize_orphans(std::size_t total_orphans, std::span<const SubCluster> subs) {
  OrphanReport r;
  r.total_orphans = total_orphans;
  for (const SubCluster& sub : subs) {
    if (sub.head_prime) {
      r.recovered += sub.recovered();
      ++r.gateways;
    }
  }
  if (r.recovered > total_orphans) {
    throw InvariantError("summarize_orphans: more recovered than orphans");
  }
  r.unreachable = total_orphans - r.recovered;
  return r;
}

}  // namespace wsnsim
