#include "eon/topology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace eon {

namespace {

bool is_connected(const Digraph& g) {
  if (g.node_count() == 0) return true;
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> stack{NodeId{0}};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    for (std::size_t a : g.out_arcs(n)) {
      NodeId m = g.arc(a).to;
      if (!seen[m.index]) {
        seen[m.index] = true;
        ++reached;
        stack.push_back(m);
      }
    }
  }
  return reached == g.node_count();
}

}  // namespace

PhysicalTopology::PhysicalTopology(std::vector<std::string> labels,
                                   const std::vector<LinkSpec>& links)
    : labels_(std::move(labels)), graph_(labels_.size()) {
  if (labels_.size() < 2) throw TopologyError("topology needs at least two nodes");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < links.size(); ++i) {
    const auto& l = links[i];
    auto describe = [&] {
      std::ostringstream os;
      os << "link #" << i;
      if (l.a < labels_.size() && l.b < labels_.size()) {
        os << " (" << labels_[l.a] << " - " << labels_[l.b] << ")";
      }
      return os.str();
    };
    if (l.a >= labels_.size() || l.b >= labels_.size()) {
      throw TopologyError(describe() + ": endpoint is not a declared node");
    }
    if (l.a == l.b) throw TopologyError(describe() + ": self-loop");
    if (!(l.length_km > 0.0)) throw TopologyError(describe() + ": length_km must be positive");
    if (!seen.emplace(std::min(l.a, l.b), std::max(l.a, l.b)).second) {
      throw TopologyError(describe() + ": duplicate link between the same node pair");
    }
    FiberLink fl{LinkId{i}, NodeId{l.a}, NodeId{l.b}, l.length_km};
    links_.push_back(fl);
    graph_.add_arc(fl.a, fl.b, fl.length_km, i);
    graph_.add_arc(fl.b, fl.a, fl.length_km, i);
  }
  if (!is_connected(graph_)) throw TopologyError("topology is not connected");
}

std::size_t PhysicalTopology::fiber_index(LinkId id, NodeId from) const {
  const auto& l = link(id);
  if (from == l.a) return 2 * id.index;
  if (from == l.b) return 2 * id.index + 1;
  throw std::invalid_argument("node is not an endpoint of the link");
}

std::pair<NodeId, NodeId> PhysicalTopology::fiber_endpoints(std::size_t fiber) const {
  const auto& l = links_.at(fiber / 2);
  return fiber % 2 == 0 ? std::pair{l.a, l.b} : std::pair{l.b, l.a};
}

PhysicalPath PhysicalTopology::to_physical(const GraphPath& p) const {
  PhysicalPath out;
  out.nodes = p.nodes;
  for (std::size_t i = 0; i < p.arcs.size(); ++i) {
    LinkId id{graph_.arc(p.arcs[i]).tag};
    out.links.push_back(id);
    out.fibers.push_back(fiber_index(id, p.nodes[i]));
    out.total_km += link(id).length_km;
  }
  return out;
}

PhysicalPath shortest_path(const PhysicalTopology& topo, NodeId s, NodeId d) {
  if (s == d) throw std::invalid_argument("source and destination must differ");
  auto p = dijkstra(topo.graph(), s, d);
  if (!p) throw NoPathError("no path between " + topo.label(s) + " and " + topo.label(d));
  return topo.to_physical(*p);
}

std::vector<PhysicalPath> k_shortest_paths(const PhysicalTopology& topo, NodeId s, NodeId d,
                                           std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (s == d) throw std::invalid_argument("source and destination must differ");
  auto paths = yen_k_shortest(topo.graph(), s, d, k);
  if (paths.empty()) {
    throw NoPathError("no path between " + topo.label(s) + " and " + topo.label(d));
  }
  std::vector<PhysicalPath> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(topo.to_physical(p));
  return out;
}

double diameter_km(const PhysicalTopology& topo) {
  double dia = 0.0;
  for (std::size_t s = 0; s < topo.node_count(); ++s) {
    for (std::size_t d = 0; d < topo.node_count(); ++d) {
      if (s == d) continue;
      dia = std::max(dia, shortest_path(topo, NodeId{s}, NodeId{d}).total_km);
    }
  }
  return dia;
}

RouteTable::RouteTable(const PhysicalTopology& topo, std::size_t k)
    : n_(topo.node_count()), k_(k), table_(n_ * n_) {
  for (std::size_t s = 0; s < n_; ++s) {
    for (std::size_t d = 0; d < n_; ++d) {
      if (s == d) continue;
      auto& cell = table_[s * n_ + d];
      cell = k_shortest_paths(topo, NodeId{s}, NodeId{d}, k);
      diameter_km_ = std::max(diameter_km_, cell.front().total_km);
    }
  }
}

}  // namespace eon
