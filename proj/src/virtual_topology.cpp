#include "eon/virtual_topology.hpp"

#include <algorithm>

namespace eon {

VirtualTopology::VirtualTopology(SpectrumState& spectrum, int max_slots_per_bvt)
    : spectrum_(&spectrum), max_slots_(max_slots_per_bvt) {}

LightpathId VirtualTopology::establish(const PhysicalPath& route, const SpectrumBlock& block,
                                       Modulation m, double now) {
  if (block.data_len > max_slots_) {
    throw CapacityError("lightpath needs " + std::to_string(block.data_len) +
                        " slots, transponder limit is " + std::to_string(max_slots_));
  }
  if (block.data_len < 1) throw CapacityError("lightpath needs at least one data slot");
  if (!reach_ok(route.total_km, m)) {
    throw CapacityError("route exceeds the reach of " + std::string(to_string(m)));
  }
  spectrum_->allocate(route, block);

  Lightpath lp;
  lp.id = LightpathId{next_id_++};
  lp.route = route;
  lp.block = block;
  lp.modulation = m;
  lp.capacity_gbps = block.data_len * format_of(m).subcarrier_gbps;
  lp.established_at = now;
  by_pair_[{route.source().index, route.destination().index}].push_back(lp.id);
  const auto id = lp.id;
  active_.emplace(id, std::move(lp));
  return id;
}

std::optional<LightpathId> VirtualTopology::groom(NodeId s, NodeId d, double bitrate_gbps) const {
  auto it = by_pair_.find({s.index, d.index});
  if (it == by_pair_.end()) return std::nullopt;
  std::optional<LightpathId> best;
  double best_util = 0.0;
  // Ids are kept ascending, so strict comparison leaves ties on the lower id.
  for (LightpathId id : it->second) {
    const Lightpath& lp = active_.at(id);
    if (lp.residual_gbps() < bitrate_gbps) continue;
    if (!best || lp.utilization() < best_util) {
      best = id;
      best_util = lp.utilization();
    }
  }
  return best;
}

void VirtualTopology::add_flow(LightpathId id, FlowId flow, double bitrate_gbps) {
  auto it = active_.find(id);
  if (it == active_.end()) throw std::logic_error("unknown lightpath");
  Lightpath& lp = it->second;
  if (lp.residual_gbps() < bitrate_gbps) {
    throw CapacityError("flow exceeds the residual capacity of the lightpath");
  }
  lp.flows.emplace_back(flow, bitrate_gbps);
  lp.used_gbps += bitrate_gbps;
}

std::optional<Lightpath> VirtualTopology::remove_flow(LightpathId id, FlowId flow) {
  auto it = active_.find(id);
  if (it == active_.end()) throw std::logic_error("unknown lightpath");
  Lightpath& lp = it->second;
  auto f = std::find_if(lp.flows.begin(), lp.flows.end(),
                        [&](const auto& e) { return e.first == flow; });
  if (f == lp.flows.end()) throw std::logic_error("flow is not carried by the lightpath");
  lp.flows.erase(f);
  // Recomputed from the remaining flows so that add/remove sequences cannot
  // accumulate rounding drift.
  lp.used_gbps = 0.0;
  for (const auto& [fid, rate] : lp.flows) lp.used_gbps += rate;
  if (!lp.flows.empty()) return std::nullopt;
  return tear_down(id);
}

Lightpath VirtualTopology::tear_down(LightpathId id) {
  auto it = active_.find(id);
  if (it == active_.end()) throw std::logic_error("unknown lightpath");
  Lightpath lp = std::move(it->second);
  active_.erase(it);
  auto& ids = by_pair_[{lp.source().index, lp.destination().index}];
  ids.erase(std::find(ids.begin(), ids.end(), id));
  if (ids.empty()) by_pair_.erase({lp.source().index, lp.destination().index});
  spectrum_->release(lp.route, lp.block);
  return lp;
}

const Lightpath& VirtualTopology::lightpath(LightpathId id) const {
  auto it = active_.find(id);
  if (it == active_.end()) throw std::logic_error("unknown lightpath");
  return it->second;
}

}  // namespace eon
