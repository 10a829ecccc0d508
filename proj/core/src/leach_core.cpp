#include "wsnsim/leach_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace wsnsim {

std::uint64_t epoch_length(double p) {
  const auto len = std::llround(1.0 / p);
  return len < 1 ? 1 : static_cast<std::uint64_t>(len);
}

double threshold(double p, RoundIndex round, bool in_g) {
  if (!in_g) {
    return 0.0;
  }
  const double slot = static_cast<double>(round % epoch_length(p));
  const double denom = 1.0 - p * slot;
  if (denom <= 0.0) {
    return 1.0;
  }
  return std::clamp(p / denom, 0.0, 1.0);
}

std::vector<NodeId> elect_cluster_heads(Network& net, RoundIndex round) {
  std::vector<NodeId> heads;
  const bool g_exhausted = std::none_of(net.nodes.begin(), net.nodes.end(), [&](const Node& n) {
    return n.alive && net.in_g(n);
  });
  if (g_exhausted) {
    net.epoch_start = round;
  }

  const auto cap = static_cast<std::size_t>(
      std::ceil(net.config.clustering_rate_cap * static_cast<double>(net.alive_count())));
  for (Node& node : net.nodes) {
    if (!node.alive) {
      continue;
    }
    const double draw = uniform_open01(net.rng);
    const double t = threshold(net.config.ch_probability, round, net.in_g(node));
    if (draw < t && heads.size() < cap) {
      heads.push_back(node.id);
      node.last_head_round = round;
    }
  }
  return heads;
}

std::vector<NodeId> ClusterAssignment::members_of(NodeId head) const {
  std::vector<NodeId> out;
  for (const auto& [member, h] : membership) {
    if (h == head) {
      out.push_back(member);
    }
  }
  return out;
}

bool ClusterAssignment::is_head(NodeId id) const {
  return std::binary_search(heads.begin(), heads.end(), id);
}

ClusterAssignment form_clusters(Network& net, std::span<const NodeId> heads,
                                const RadioParams& radio, EnergyLedger& ledger) {
  ClusterAssignment out;
  out.heads.assign(heads.begin(), heads.end());
  std::sort(out.heads.begin(), out.heads.end());
  out.heads.erase(std::unique(out.heads.begin(), out.heads.end()), out.heads.end());
  for (NodeId h : out.heads) {
    if (!net.at(h).alive) {
      throw InvariantError("form_clusters: head " + std::to_string(h) + " is dead");
    }
  }

  const double range = net.config.tx_range;
  for (Node& node : net.nodes) {
    if (!node.alive) {
      continue;
    }
    if (out.is_head(node.id)) {
      node.role = Role::ClusterHead;
      continue;
    }
    std::optional<NodeId> best;
    double best_d = std::numeric_limits<double>::infinity();
    for (NodeId h : out.heads) {
      const double d = distance(node.pos, net.at(h).pos);
      if (d <= range && d < best_d) {
        best = h;
        best_d = d;
      }
    }
    if (best) {
      out.membership.emplace(node.id, *best);
      node.role = Role::Member;
    } else {
      out.unassigned.push_back(node.id);
      node.role = Role::Orphan;
    }
  }

  const auto ctrl = net.config.control_bits;
  for (NodeId h : out.heads) {
    ledger.charge(net, h, tx_cost(ctrl, range, radio));
  }
  for (const auto& [member, head] : out.membership) {
    const double d = distance(net.at(member).pos, net.at(head).pos);
    if (ledger.charge(net, member, tx_cost(ctrl, d, radio))) {
      ledger.charge(net, head, rx_cost(ctrl, radio));
    }
  }
  return out;
}

TdmaSchedule build_tdma_schedule(const ClusterAssignment& assignment) {
  TdmaSchedule schedule;
  for (NodeId h : assignment.heads) {
    schedule.head_frames[h];
  }
  // membership is ordered by member id, so slots come out ascending.
  for (const auto& [member, head] : assignment.membership) {
    schedule.head_frames[head].slots.push_back({member, SlotKind::Data});
  }
  return schedule;
}

void run_cluster_frames(Network& net, const ClusterAssignment& assignment,
                        const TdmaSchedule& schedule, const RadioParams& radio,
                        const RelayBuffer& relays, RoundReport& report) {
  const auto l = net.config.packet_bits;
  EnergyLedger& ledger = report.energy;
  for (const auto& [head, frame] : schedule.head_frames) {
    if (!assignment.is_head(head)) {
      throw InvariantError("run_cluster_frames: frame for non-head " + std::to_string(head));
    }
    const Position head_pos = net.at(head).pos;
    std::uint64_t received = 0;
    std::size_t sources = 0;
    for (const Slot& slot : frame.slots) {
      std::size_t carried = 1;
      if (slot.kind == SlotKind::Relay) {
        auto it = relays.find(slot.sender);
        if (it == relays.end()) {
          continue;
        }
        carried = it->second;
      }
      const double d = distance(net.at(slot.sender).pos, head_pos);
      if (!ledger.charge(net, slot.sender, tx_cost(l, d, radio))) {
        continue;
      }
      if (ledger.charge(net, head, rx_cost(l, radio))) {
        ++received;
        sources += carried;
      }
    }
    if (!ledger.charge(net, head, aggregation_cost(l, received + 1, radio))) {
      continue;
    }
    const double to_sink = distance(head_pos, net.config.sink_pos);
    if (ledger.charge(net, head, tx_cost(l, to_sink, radio))) {
      ++report.packets_to_bs;
      report.sources_delivered += sources + 1;
    }
  }
}

void run_steady_state_leach(Network& net, const ClusterAssignment& assignment,
                            const TdmaSchedule& schedule, const RadioParams& radio,
                            RoundReport& report) {
  run_cluster_frames(net, assignment, schedule, radio, RelayBuffer{}, report);
}

}  // namespace wsnsim
