#include "eon/modulation_topology.hpp"

namespace eon {

ModulationTopology::ModulationTopology(const RouteTable& routes, std::size_t node_count,
                                       Modulation m)
    : modulation_(m), n_(node_count), graph_(node_count), index_(node_count * node_count) {
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (u == v) continue;
      const PhysicalPath& p = routes.shortest(NodeId{u}, NodeId{v});
      if (!reach_ok(p.total_km, m)) continue;
      index_[u * n_ + v] = edges_.size();
      graph_.add_arc(NodeId{u}, NodeId{v}, p.total_km, edges_.size());
      edges_.push_back(Edge{NodeId{u}, NodeId{v}, p});
    }
  }
}

const ModulationTopology::Edge* ModulationTopology::lookup(NodeId u, NodeId v) const {
  if (u.index >= n_ || v.index >= n_) return nullptr;
  const auto& slot = index_[u.index * n_ + v.index];
  return slot ? &edges_[*slot] : nullptr;
}

ModulationTopology build_modulation_topology(const PhysicalTopology& topo, Modulation m) {
  RouteTable shortest(topo, 1);
  return ModulationTopology(shortest, topo.node_count(), m);
}

}  // namespace eon
