#include "wsnsim/simulation.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace wsnsim {

namespace {

[[noreturn]] void broken(RoundIndex round, const std::string& what) {
  throw InvariantError("round " + std::to_string(round) + ": " + what);
}

}  // namespace

void check_round_invariants(const Network& net, const RoundState& st) {
  const RoundIndex r = st.round;
  const double range = net.config.tx_range;
  const ClusterAssignment& a = st.assignment;

  // Partition of the round's participants.
  std::set<NodeId> seen;
  auto claim = [&](NodeId id, const char* what) {
    if (id >= net.nodes.size()) broken(r, std::string(what) + " id out of range");
    if (!seen.insert(id).second) broken(r, "node " + std::to_string(id) + " listed twice");
  };
  for (NodeId h : a.heads) claim(h, "head");
  for (const auto& [m, h] : a.membership) {
    claim(m, "member");
    if (!a.is_head(h)) broken(r, "member " + std::to_string(m) + " joined a non-head");
    if (distance(net.at(m).pos, net.at(h).pos) > range) {
      broken(r, "member " + std::to_string(m) + " out of range of its head");
    }
  }
  for (NodeId u : a.unassigned) claim(u, "orphan");
  if (seen.size() != st.participants) {
    broken(r, "cluster partition does not cover the alive nodes");
  }

  // Sub-clusters.
  std::set<NodeId> orphan_set(st.orphans.begin(), st.orphans.end());
  std::set<NodeId> gateways;
  std::set<NodeId> sub_nodes;
  for (const SubCluster& sub : st.handshake.subs) {
    auto it = a.membership.find(sub.gateway);
    if (it == a.membership.end() || it->second != sub.parent_head) {
      broken(r, "gateway " + std::to_string(sub.gateway) + " is not a member of its head");
    }
    if (!gateways.insert(sub.gateway).second) {
      broken(r, "gateway " + std::to_string(sub.gateway) + " serves two sub-clusters");
    }
    if (!sub.head_prime) broken(r, "sub-cluster without CH'");
    const Position ppos = net.at(*sub.head_prime).pos;
    if (distance(ppos, net.at(sub.gateway).pos) > range) broken(r, "CH' out of gateway range");
    auto own = [&](NodeId o) {
      if (!orphan_set.count(o)) broken(r, "sub-cluster node " + std::to_string(o) + " not orphan");
      if (!sub_nodes.insert(o).second) broken(r, "orphan " + std::to_string(o) + " in two subs");
    };
    own(*sub.head_prime);
    for (NodeId m : sub.members) {
      own(m);
      if (distance(net.at(m).pos, ppos) > range) broken(r, "sub-cluster member out of CH' range");
    }
    for (NodeId d : sub.dropped) own(d);
  }
  const OrphanReport& rep = st.orphan_report;
  if (rep.total_orphans != st.orphans.size() ||
      rep.recovered + rep.unreachable != rep.total_orphans || rep.gateways > rep.recovered) {
    broken(r, "orphan report inconsistent");
  }

  // Slots: one data slot per member in its head's frame, one relay slot per
  // gateway, one slot per sub-cluster member under its CH'.
  const TdmaSchedule& s = st.schedule;
  if (s.head_frames.size() != a.heads.size()) broken(r, "frame count differs from head count");
  std::set<std::pair<NodeId, SlotKind>> slots;
  for (const auto& [head, frame] : s.head_frames) {
    if (!a.is_head(head)) broken(r, "frame for non-head");
    for (const Slot& slot : frame.slots) {
      if (!slots.insert({slot.sender, slot.kind}).second) {
        broken(r, "node " + std::to_string(slot.sender) + " holds two slots of one kind");
      }
      auto it = a.membership.find(slot.sender);
      if (it == a.membership.end() || it->second != head) broken(r, "slot for a non-member");
      if (slot.kind == SlotKind::Relay && !gateways.count(slot.sender)) {
        broken(r, "relay slot for a non-gateway");
      }
    }
  }
  for (const auto& [m, h] : a.membership) {
    if (!slots.count({m, SlotKind::Data})) broken(r, "member " + std::to_string(m) + " no slot");
  }
  for (NodeId g : gateways) {
    if (!slots.count({g, SlotKind::Relay})) broken(r, "gateway " + std::to_string(g) + " no relay");
  }
  for (const SubCluster& sub : st.handshake.subs) {
    auto it = s.sub_frames.find(*sub.head_prime);
    const std::size_t len = it == s.sub_frames.end() ? 0 : it->second.frame_length();
    if (len != sub.members.size()) broken(r, "sub-frame length differs from member count");
    for (std::size_t i = 0; i < len; ++i) {
      if (it->second.slots[i].sender != sub.members[i]) broken(r, "sub-frame slot mismatch");
    }
  }
  if (s.sub_frames.size() > st.handshake.subs.size()) broken(r, "stray sub-frame");
}

Simulation::Simulation(const NetworkConfig& config, const RadioParams& radio)
    : net_(deploy_network(config)), radio_(radio), builder_(config, radio) {
  validate(radio);
}

bool Simulation::step() {
  if (termination_) {
    return false;
  }
  if (next_round_ >= net_.config.max_rounds) {
    termination_ = Termination::MaxRounds;
    return false;
  }
  if (net_.alive_count() == 0) {
    termination_ = Termination::AllDead;
    return false;
  }

  RoundState st;
  st.round = next_round_;
  st.participants = net_.alive_count();
  st.report = RoundReport(net_.nodes.size());

  const std::vector<NodeId> heads = elect_cluster_heads(net_, st.round);
  st.assignment = form_clusters(net_, heads, radio_, st.report.energy);
  st.schedule = build_tdma_schedule(st.assignment);
  st.orphans = detect_orphans(net_, st.assignment);

  if (net_.config.protocol == Protocol::OLeach) {
    st.handshake = gateway_handshake(net_, st.assignment, st.orphans, radio_, st.report.energy);
    for (SubCluster& sub : st.handshake.subs) {
      elect_sub_cluster_head(sub, net_);
    }
    st.schedule = extend_tdma(st.schedule, st.handshake.subs);
    charge_slot_reservation(net_, st.handshake.subs, radio_, st.report.energy);
    run_steady_state_oleach(net_, st.assignment, st.schedule, st.handshake.subs, radio_,
                            st.report);
  } else {
    run_steady_state_leach(net_, st.assignment, st.schedule, radio_, st.report);
  }

  st.orphan_report = summarize_orphans(st.orphans.size(), st.handshake.subs);
  st.metrics = compute_round_metrics(net_, st.round, st.participants, st.assignment,
                                     st.orphan_report, st.report);
  check_round_invariants(net_, st);
  builder_.push(st.metrics);
  last_ = std::move(st);
  ++next_round_;
  return true;
}

SimulationTrace Simulation::run() && {
  while (step()) {
  }
  return std::move(builder_).finish(*termination_);
}

SimulationTrace simulate(const NetworkConfig& config, const RadioParams& radio) {
  return Simulation(config, radio).run();
}

std::vector<SimulationTrace> run_simulation(const RunSpec& spec) {
  validate(spec);
  std::vector<SimulationTrace> out;
  auto run_as = [&](Protocol p) {
    NetworkConfig config = spec.network;
    config.protocol = p;
    out.push_back(simulate(config, spec.radio));
  };
  switch (spec.mode) {
    case RunMode::Leach: run_as(Protocol::Leach); break;
    case RunMode::OLeach: run_as(Protocol::OLeach); break;
    case RunMode::Compare:
      run_as(Protocol::Leach);
      run_as(Protocol::OLeach);
      break;
  }
  return out;
}

}  // namespace wsnsim
