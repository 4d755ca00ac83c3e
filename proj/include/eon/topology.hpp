#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eon/graph.hpp"

namespace eon {

struct LinkId {
  std::uint32_t index = 0;

  constexpr LinkId() = default;
  constexpr explicit LinkId(std::size_t i) : index(static_cast<std::uint32_t>(i)) {}

  friend constexpr auto operator<=>(LinkId, LinkId) = default;
};

struct FiberLink {
  LinkId id;
  NodeId a;
  NodeId b;
  double length_km = 0.0;
};

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PhysicalPath {
  std::vector<NodeId> nodes;
  std::vector<LinkId> links;
  // Directed fiber index of every traversed link, in route order. Each
  // bidirectional link owns fibers 2*id (a->b) and 2*id+1 (b->a).
  std::vector<std::size_t> fibers;
  double total_km = 0.0;

  NodeId source() const { return nodes.front(); }
  NodeId destination() const { return nodes.back(); }
  std::size_t hops() const { return links.size(); }

  friend bool operator==(const PhysicalPath& a, const PhysicalPath& b) {
    return a.nodes == b.nodes && a.links == b.links;
  }
};

// Connected, loop-free, simple undirected graph of fiber links.
class PhysicalTopology {
 public:
  struct LinkSpec {
    std::size_t a;
    std::size_t b;
    double length_km;
  };

  // Throws TopologyError naming the offending element on invalid input.
  PhysicalTopology(std::vector<std::string> labels, const std::vector<LinkSpec>& links);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t link_count() const { return links_.size(); }
  std::size_t fiber_count() const { return 2 * links_.size(); }

  const std::vector<FiberLink>& links() const { return links_; }
  const FiberLink& link(LinkId id) const { return links_.at(id.index); }
  const std::string& label(NodeId n) const { return labels_.at(n.index); }
  std::size_t degree(NodeId n) const { return graph_.out_arcs(n).size(); }

  // Directed fiber used when traversing `id` away from `from`.
  std::size_t fiber_index(LinkId id, NodeId from) const;
  std::pair<NodeId, NodeId> fiber_endpoints(std::size_t fiber) const;

  // Arc tags are link indices; both directions of each link are present.
  const Digraph& graph() const { return graph_; }

  PhysicalPath to_physical(const GraphPath& p) const;

 private:
  std::vector<std::string> labels_;
  std::vector<FiberLink> links_;
  Digraph graph_;
};

// Throws NoPathError when s and d are not connected and
// std::invalid_argument when s == d.
PhysicalPath shortest_path(const PhysicalTopology& topo, NodeId s, NodeId d);

// Up to k loopless paths, nondecreasing total_km, deterministic tie order.
// Throws NoPathError when no path exists at all.
std::vector<PhysicalPath> k_shortest_paths(const PhysicalTopology& topo, NodeId s, NodeId d,
                                           std::size_t k);

double diameter_km(const PhysicalTopology& topo);

// k shortest physical routes for every ordered node pair, computed once.
class RouteTable {
 public:
  RouteTable(const PhysicalTopology& topo, std::size_t k);

  std::size_t k() const { return k_; }
  const std::vector<PhysicalPath>& routes(NodeId s, NodeId d) const {
    return table_.at(s.index * n_ + d.index);
  }
  // Shortest route for (s, d); s != d.
  const PhysicalPath& shortest(NodeId s, NodeId d) const { return routes(s, d).front(); }
  double diameter_km() const { return diameter_km_; }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<std::vector<PhysicalPath>> table_;
  double diameter_km_ = 0.0;
};

}  // namespace eon
