#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace eon {

struct NodeId {
  std::uint32_t index = 0;

  constexpr NodeId() = default;
  constexpr explicit NodeId(std::size_t i) : index(static_cast<std::uint32_t>(i)) {}

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

class NoPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Directed graph with positive arc weights. Each arc carries an opaque tag
// that callers use to map arcs back to their own edge objects.
class Digraph {
 public:
  struct Arc {
    NodeId from;
    NodeId to;
    double weight = 0.0;
    std::size_t tag = 0;
  };

  explicit Digraph(std::size_t node_count = 0);

  std::size_t add_arc(NodeId from, NodeId to, double weight, std::size_t tag);

  std::size_t node_count() const { return out_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  const Arc& arc(std::size_t id) const { return arcs_.at(id); }
  std::span<const std::size_t> out_arcs(NodeId n) const { return out_.at(n.index); }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
};

// A simple path through a Digraph. `cost` is the weight sum accumulated in
// traversal order.
struct GraphPath {
  std::vector<NodeId> nodes;
  std::vector<std::size_t> arcs;
  double cost = 0.0;

  std::size_t hops() const { return arcs.size(); }
  friend bool operator==(const GraphPath& a, const GraphPath& b) {
    return a.nodes == b.nodes && a.arcs == b.arcs;
  }
};

// Total order used for every path ranking in the library: cost, then fewer
// hops, then lexicographically smaller node sequence.
bool path_precedes(const GraphPath& a, const GraphPath& b);

struct PathExclusions {
  std::vector<bool> nodes;  // indexed by node
  std::vector<bool> arcs;   // indexed by arc id
};

std::optional<GraphPath> dijkstra(const Digraph& g, NodeId source, NodeId target,
                                  const PathExclusions* excluded = nullptr);

// Yen's loopless k-shortest paths. Returns up to k paths ordered by
// path_precedes; empty when target is unreachable.
std::vector<GraphPath> yen_k_shortest(const Digraph& g, NodeId source, NodeId target,
                                      std::size_t k);

}  // namespace eon
