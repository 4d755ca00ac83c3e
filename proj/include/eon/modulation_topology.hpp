#pragma once

#include <optional>
#include <vector>

#include "eon/graph.hpp"
#include "eon/modulation.hpp"
#include "eon/topology.hpp"

namespace eon {

// Reachability graph of one modulation format: an arc u->v exists iff the
// shortest physical u->v path fits within the format's reach. The arc
// weight is that path's length and the path itself is kept for allocation.
class ModulationTopology {
 public:
  struct Edge {
    NodeId from;
    NodeId to;
    PhysicalPath path;
  };

  ModulationTopology(const RouteTable& routes, std::size_t node_count, Modulation m);

  Modulation modulation() const { return modulation_; }
  const Digraph& graph() const { return graph_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(NodeId u, NodeId v) const { return lookup(u, v) != nullptr; }
  // nullptr when (u, v) is not an edge.
  const Edge* lookup(NodeId u, NodeId v) const;

 private:
  Modulation modulation_;
  std::size_t n_;
  Digraph graph_;
  std::vector<Edge> edges_;
  std::vector<std::optional<std::size_t>> index_;
};

ModulationTopology build_modulation_topology(const PhysicalTopology& topo, Modulation m);

}  // namespace eon
