#include "eon/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <tuple>

namespace eon {

Digraph::Digraph(std::size_t node_count) : out_(node_count) {}

std::size_t Digraph::add_arc(NodeId from, NodeId to, double weight, std::size_t tag) {
  if (from.index >= out_.size() || to.index >= out_.size()) {
    throw std::out_of_range("arc endpoint outside graph");
  }
  if (!(weight > 0.0)) throw std::invalid_argument("arc weight must be positive");
  arcs_.push_back(Arc{from, to, weight, tag});
  out_[from.index].push_back(arcs_.size() - 1);
  return arcs_.size() - 1;
}

bool path_precedes(const GraphPath& a, const GraphPath& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.hops() != b.hops()) return a.hops() < b.hops();
  return a.nodes < b.nodes;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Label {
  double dist = std::numeric_limits<double>::infinity();
  std::size_t hops = 0;
  std::size_t pred_arc = kNone;
  bool settled = false;
};

std::vector<NodeId> trace_nodes(const Digraph& g, const std::vector<Label>& labels,
                                NodeId source, NodeId n) {
  std::vector<NodeId> seq{n};
  while (n != source) {
    n = g.arc(labels[n.index].pred_arc).from;
    seq.push_back(n);
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace

std::optional<GraphPath> dijkstra(const Digraph& g, NodeId source, NodeId target,
                                  const PathExclusions* excluded) {
  const auto n = g.node_count();
  if (source.index >= n || target.index >= n) throw std::out_of_range("node outside graph");
  auto node_blocked = [&](NodeId v) {
    return excluded && !excluded->nodes.empty() && excluded->nodes[v.index];
  };
  auto arc_blocked = [&](std::size_t a) {
    return excluded && !excluded->arcs.empty() && excluded->arcs[a];
  };
  if (node_blocked(source) || node_blocked(target)) return std::nullopt;

  std::vector<Label> labels(n);
  labels[source.index].dist = 0.0;
  using Entry = std::tuple<double, std::size_t, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  open.emplace(0.0, 0, source.index);

  while (!open.empty()) {
    auto [dist, hops, idx] = open.top();
    open.pop();
    Label& here = labels[idx];
    if (here.settled || dist != here.dist || hops != here.hops) continue;
    here.settled = true;
    if (idx == target.index) break;

    for (std::size_t a : g.out_arcs(NodeId{idx})) {
      if (arc_blocked(a)) continue;
      const auto& arc = g.arc(a);
      if (node_blocked(arc.to)) continue;
      Label& next = labels[arc.to.index];
      if (next.settled) continue;
      const double nd = dist + arc.weight;
      const std::size_t nh = hops + 1;
      bool better = nd < next.dist || (nd == next.dist && nh < next.hops);
      if (!better && nd == next.dist && nh == next.hops && next.pred_arc != kNone) {
        // Equal cost and hops: keep the lexicographically smaller node sequence.
        auto mine = trace_nodes(g, labels, source, NodeId{idx});
        mine.push_back(arc.to);
        better = mine < trace_nodes(g, labels, source, arc.to);
      }
      if (better) {
        next.dist = nd;
        next.hops = nh;
        next.pred_arc = a;
        open.emplace(nd, nh, arc.to.index);
      }
    }
  }

  if (source == target || labels[target.index].pred_arc == kNone) {
    return std::nullopt;
  }
  GraphPath path;
  path.nodes = trace_nodes(g, labels, source, target);
  for (std::size_t i = 1; i < path.nodes.size(); ++i) {
    NodeId v = path.nodes[i];
    path.arcs.push_back(labels[v.index].pred_arc);
  }
  for (std::size_t a : path.arcs) path.cost += g.arc(a).weight;
  return path;
}

std::vector<GraphPath> yen_k_shortest(const Digraph& g, NodeId source, NodeId target,
                                      std::size_t k) {
  std::vector<GraphPath> accepted;
  if (k == 0) return accepted;
  auto first = dijkstra(g, source, target);
  if (!first) return accepted;
  accepted.push_back(std::move(*first));

  auto cmp = [](const GraphPath& a, const GraphPath& b) { return path_precedes(a, b); };
  std::set<GraphPath, decltype(cmp)> candidates(cmp);

  PathExclusions ex;
  while (accepted.size() < k) {
    const GraphPath& last = accepted.back();
    for (std::size_t i = 0; i + 1 < last.nodes.size(); ++i) {
      const NodeId spur = last.nodes[i];
      ex.nodes.assign(g.node_count(), false);
      ex.arcs.assign(g.arc_count(), false);
      for (std::size_t r = 0; r < i; ++r) ex.nodes[last.nodes[r].index] = true;
      for (const auto& p : accepted) {
        if (p.nodes.size() > i + 1 &&
            std::equal(p.nodes.begin(), p.nodes.begin() + static_cast<long>(i + 1),
                       last.nodes.begin())) {
          ex.arcs[p.arcs[i]] = true;
        }
      }
      auto spur_path = dijkstra(g, spur, target, &ex);
      if (!spur_path) continue;

      GraphPath total;
      total.nodes.assign(last.nodes.begin(), last.nodes.begin() + static_cast<long>(i));
      total.arcs.assign(last.arcs.begin(), last.arcs.begin() + static_cast<long>(i));
      total.nodes.insert(total.nodes.end(), spur_path->nodes.begin(), spur_path->nodes.end());
      total.arcs.insert(total.arcs.end(), spur_path->arcs.begin(), spur_path->arcs.end());
      for (std::size_t a : total.arcs) total.cost += g.arc(a).weight;
      if (std::find(accepted.begin(), accepted.end(), total) == accepted.end()) {
        candidates.insert(std::move(total));
      }
    }
    if (candidates.empty()) break;
    accepted.push_back(*candidates.begin());
    candidates.erase(candidates.begin());
  }
  return accepted;
}

}  // namespace eon
