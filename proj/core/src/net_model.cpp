#include "wsnsim/net_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace wsnsim {

const char* to_string(Role role) {
  switch (role) {
    case Role::Member: return "member";
    case Role::ClusterHead: return "cluster_head";
    case Role::Gateway: return "gateway";
    case Role::SubClusterHead: return "sub_cluster_head";
    case Role::Orphan: return "orphan";
    case Role::Dead: return "dead";
  }
  return "unknown";
}

const char* to_string(Protocol protocol) {
  return protocol == Protocol::Leach ? "leach" : "oleach";
}

namespace {

void require(bool ok, const char* field, const std::string& bound) {
  if (!ok) {
    throw ConfigError(std::string(field) + ": value out of range, expected " + bound);
  }
}

}  // namespace

void validate(const NetworkConfig& c) {
  require(std::isfinite(c.field_width) && c.field_width >= 0.0, "field_width", ">= 0");
  require(std::isfinite(c.field_height) && c.field_height >= 0.0, "field_height", ">= 0");
  require(std::isfinite(c.sink_pos.x), "sink_x", "a finite number");
  require(std::isfinite(c.sink_pos.y), "sink_y", "a finite number");
  require(std::isfinite(c.initial_energy) && c.initial_energy > 0.0, "initial_energy", "> 0");
  require(c.ch_probability > 0.0 && c.ch_probability < 1.0, "ch_probability", "in (0, 1)");
  require(c.clustering_rate_cap > 0.0 && c.clustering_rate_cap <= 1.0, "clustering_rate_cap",
          "in (0, 1]");
  require(std::isfinite(c.tx_range) && c.tx_range > 0.0, "tx_range", "> 0");
  require(c.packet_bits > 0, "packet_bits", "> 0");
  require(c.n_nodes <= std::size_t{std::numeric_limits<NodeId>::max()}, "n_nodes",
          "<= 4294967295");
}

double uniform_open01(std::mt19937_64& engine) {
  return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

std::size_t Network::alive_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.alive; }));
}

double Network::residual_energy() const {
  return std::accumulate(nodes.begin(), nodes.end(), 0.0,
                         [](double acc, const Node& n) { return acc + n.energy; });
}

Network deploy_network(const NetworkConfig& config) {
  validate(config);
  Network net;
  net.config = config;
  net.rng.seed(config.seed);
  net.nodes.reserve(config.n_nodes);
  for (std::size_t i = 0; i < config.n_nodes; ++i) {
    Node node;
    node.id = static_cast<NodeId>(i);
    node.pos.x = uniform_open01(net.rng) * config.field_width;
    node.pos.y = uniform_open01(net.rng) * config.field_height;
    node.energy = config.initial_energy;
    net.nodes.push_back(node);
  }
  return net;
}

double distance(Position a, Position b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

double debit_energy(Node& node, double cost) {
  if (!node.alive) {
    throw InvariantError("debit_energy: node " + std::to_string(node.id) + " is dead");
  }
  if (!(cost >= 0.0)) {
    throw InvariantError("debit_energy: negative cost for node " + std::to_string(node.id));
  }
  const double removed = std::min(cost, node.energy);
  if (node.energy - cost <= 0.0) {
    node.energy = 0.0;
    node.alive = false;
    node.role = Role::Dead;
  } else {
    node.energy -= cost;
  }
  return removed;
}

bool EnergyLedger::charge(Network& net, NodeId id, double cost) {
  Node& node = net.at(id);
  if (!node.alive) {
    return false;
  }
  const double removed = debit_energy(node, cost);
  if (per_node_.size() < net.nodes.size()) {
    per_node_.resize(net.nodes.size(), 0.0);
  }
  per_node_[id] += removed;
  total_ += removed;
  if (!node.alive) {
    deaths_.push_back(id);
  }
  return true;
}

}  // namespace wsnsim
