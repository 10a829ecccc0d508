#pragma once

// Sensor field: node identity, placement, energy bookkeeping and geometry.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsnsim {

/// Raised when a configuration value is outside its allowed range.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal simulator contract is broken (e.g. debiting a dead node).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using NodeId = std::uint32_t;
using RoundIndex = std::uint64_t;

struct Position {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

enum class Role : std::uint8_t { Member, ClusterHead, Gateway, SubClusterHead, Orphan, Dead };

const char* to_string(Role role);

enum class Protocol : std::uint8_t { Leach, OLeach };

const char* to_string(Protocol protocol);

struct Node {
  NodeId id = 0;
  Position pos;
  double energy = 0.0;  // joules
  bool alive = true;
  // Round in which the node last served as cluster head; empty means never.
  // Together with Network::epoch_start this encodes membership of G.
  std::optional<RoundIndex> last_head_round;
  Role role = Role::Member;

  friend bool operator==(const Node&, const Node&) = default;
};

struct NetworkConfig {
  std::size_t n_nodes = 500;
  double field_width = 300.0;
  double field_height = 300.0;
  Position sink_pos{0.0, 0.0};
  double initial_energy = 0.5;
  double ch_probability = 0.1;
  double clustering_rate_cap = 0.1;
  double tx_range = 70.0;
  std::uint32_t packet_bits = 2000;
  std::uint32_t control_bits = 200;
  RoundIndex max_rounds = 2000;
  std::uint64_t seed = 1;
  Protocol protocol = Protocol::Leach;

  friend bool operator==(const NetworkConfig&, const NetworkConfig&) = default;
};

/// Throws ConfigError naming the first offending field.
void validate(const NetworkConfig& config);

/// Uniform draw on the open interval (0, 1) from the top 53 bits of one engine output.
double uniform_open01(std::mt19937_64& engine);

struct Network {
  std::vector<Node> nodes;
  NetworkConfig config;
  std::mt19937_64 rng;
  // First round of the current election epoch; nodes that have not been head
  // since this round are in G.
  RoundIndex epoch_start = 0;

  [[nodiscard]] bool in_g(const Node& node) const {
    return !node.last_head_round || *node.last_head_round < epoch_start;
  }
  [[nodiscard]] std::size_t alive_count() const;
  [[nodiscard]] double residual_energy() const;
  [[nodiscard]] const Node& at(NodeId id) const { return nodes.at(id); }
  Node& at(NodeId id) { return nodes.at(id); }
};

/// Places config.n_nodes nodes uniformly in the field. The engine is seeded
/// from config.seed and consumed x then y for each node in id order.
Network deploy_network(const NetworkConfig& config);

double distance(Position a, Position b);

/// Removes min(cost, energy) from the node and returns the amount removed.
/// A node whose residual reaches zero dies. Throws InvariantError when the
/// node is already dead or cost is negative.
double debit_energy(Node& node, double cost);

/// Energy spent during one round, per node, plus the nodes that died.
class EnergyLedger {
 public:
  EnergyLedger() = default;
  explicit EnergyLedger(std::size_t n_nodes) : per_node_(n_nodes, 0.0) {}

  /// Charges `cost` to `id` when it is alive. Returns false, charging nothing,
  /// when the node is already dead: the action does not happen.
  bool charge(Network& net, NodeId id, double cost);

  [[nodiscard]] double total() const { return total_; }
  [[nodiscard]] const std::vector<double>& per_node() const { return per_node_; }
  [[nodiscard]] const std::vector<NodeId>& deaths() const { return deaths_; }

 private:
  std::vector<double> per_node_;
  std::vector<NodeId> deaths_;
  double total_ = 0.0;
};

}  // namespace wsnsim
