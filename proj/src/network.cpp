#include "eon/network.hpp"

#include <numeric>
#include <stdexcept>

namespace eon {

NetworkModel::NetworkModel(PhysicalTopology topo, NetworkParams params)
    : topo_(std::move(topo)), params_(std::move(params)), routes_(topo_, std::max<std::size_t>(params_.rsa_k, 1)) {
  if (params_.slots_per_fiber < 1) throw std::invalid_argument("slots_per_fiber must be >= 1");
  if (params_.guard_slots < 0) throw std::invalid_argument("guard_slots must be >= 0");
  if (params_.max_slots_per_bvt < 1) throw std::invalid_argument("max_slots_per_bvt must be >= 1");
  if (params_.rsa_k < 1 || params_.max_k < 1) throw std::invalid_argument("k must be >= 1");

  const std::size_t n = topo_.node_count();
  for (Modulation m : params_.formats.descending()) {
    const auto i = index_of(m);
    mod_topos_[i] = std::make_unique<ModulationTopology>(routes_, n, m);
    auto& table = mod_paths_[i];
    table.resize(n * n);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t d = 0; d < n; ++d) {
        if (s == d) continue;
        table[s * n + d] =
            yen_k_shortest(mod_topos_[i]->graph(), NodeId{s}, NodeId{d}, params_.max_k);
      }
    }
  }
}

const ModulationTopology& NetworkModel::modulation_topology(Modulation m) const {
  const auto& p = mod_topos_[index_of(m)];
  if (!p) throw std::invalid_argument("modulation format not available in this model");
  return *p;
}

const std::vector<GraphPath>& NetworkModel::modulation_paths(Modulation m, NodeId s,
                                                             NodeId d) const {
  const auto& table = mod_paths_[index_of(m)];
  if (table.empty()) throw std::invalid_argument("modulation format not available in this model");
  return table.at(s.index * topo_.node_count() + d.index);
}

NetworkState::NetworkState(const NetworkModel& model)
    : model_(&model),
      spectrum_(model.topology(), model.params().slots_per_fiber),
      vt_(spectrum_, model.params().max_slots_per_bvt) {}

void NetworkState::advance_to(double t) {
  if (t < now_) throw std::logic_error("simulation time moved backwards");
  now_ = t;
}

std::size_t NetworkState::established_total() const {
  return std::accumulate(established_.begin(), established_.end(), std::size_t{0});
}

std::vector<Lightpath> NetworkState::depart(FlowId flow) {
  auto it = flows_.find(flow);
  if (it == flows_.end()) throw std::logic_error("departure of an unknown flow");
  std::vector<Lightpath> torn;
  for (LightpathId id : it->second) {
    if (auto lp = vt_.remove_flow(id, flow)) {
      ledger_.close(lp->id, now_);
      torn.push_back(std::move(*lp));
    }
  }
  flows_.erase(it);
  return torn;
}

NetworkState::Snapshot NetworkState::snapshot() const {
  Snapshot s;
  s.grids.assign(spectrum_.grids().begin(), spectrum_.grids().end());
  s.lightpaths = vt_.active();
  s.next_lightpath_id = vt_.next_id();
  s.ledger = ledger_;
  s.established = established_;
  s.flows = flows_;
  return s;
}

}  // namespace eon
