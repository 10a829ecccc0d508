#pragma once

#include <initializer_list>
#include <vector>

#include "wsnsim/net_model.hpp"

namespace fixtures {

/// A network whose node i sits at positions[i]; everything else from `config`.
inline wsnsim::Network make_network(const std::vector<wsnsim::Position>& positions,
                                    wsnsim::NetworkConfig config = {}) {
  config.n_nodes = positions.size();
  wsnsim::Network net = wsnsim::deploy_network(config);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    net.nodes[i].pos = positions[i];
  }
  return net;
}

inline double energy_of(const wsnsim::Network& net, wsnsim::NodeId id) {
  return net.at(id).energy;
}

}  // namespace fixtures
