#include "eon/rsa.hpp"

#include <algorithm>
#include <stdexcept>

namespace eon::rsa {

std::optional<SegmentPlan> serve_segment(const NetworkState& state, NodeId s, NodeId d,
                                         double bitrate_gbps, Modulation m, std::size_t k) {
  if (s == d) throw std::invalid_argument("segment endpoints must differ");
  if (!(bitrate_gbps > 0.0)) throw std::invalid_argument("bitrate must be positive");

  if (auto lp = state.virtual_topology().groom(s, d, bitrate_gbps)) {
    return GroomPlan{*lp};
  }

  const auto& params = state.model().params();
  const int data_len = slots_needed(bitrate_gbps, m);
  if (data_len > params.max_slots_per_bvt) return std::nullopt;

  const auto& routes = state.model().routes().routes(s, d);
  const std::size_t limit = std::min(k, routes.size());
  for (std::size_t i = 0; i < limit; ++i) {
    const PhysicalPath& route = routes[i];
    if (!reach_ok(route.total_km, m)) continue;
    if (auto block = state.spectrum().first_fit(route, data_len, params.guard_slots)) {
      return NewLightpathPlan{&route, *block, m};
    }
  }
  return std::nullopt;
}

Reservation::Reservation(NetworkState& state, FlowId flow, double bitrate_gbps)
    : state_(&state),
      flow_(flow),
      bitrate_(bitrate_gbps),
      saved_next_id_(state.virtual_topology().next_id()) {}

Reservation::~Reservation() {
  if (!done_) rollback();
}

LightpathId Reservation::apply(const SegmentPlan& plan) {
  if (done_) throw std::logic_error("reservation already closed");
  auto& vt = state_->virtual_topology();
  LightpathId id;
  bool created = false;
  if (const auto* g = std::get_if<GroomPlan>(&plan)) {
    id = g->lightpath;
  } else {
    const auto& n = std::get<NewLightpathPlan>(plan);
    id = vt.establish(*n.route, n.block, n.modulation, state_->now());
    created = true;
  }
  try {
    vt.add_flow(id, flow_, bitrate_);
  } catch (...) {
    if (created) vt.tear_down(id);
    throw;
  }
  chain_.push_back(id);
  created_.push_back(created);
  return id;
}

void Reservation::commit() {
  if (done_) throw std::logic_error("reservation already closed");
  auto& vt = state_->virtual_topology();
  const auto& topo = state_->model().topology();
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    if (!created_[i]) continue;
    const Lightpath& lp = vt.lightpath(chain_[i]);
    state_->ledger_.open(lp.id, energy::lightpath_profile(topo, lp.route, lp.capacity_gbps),
                         lp.capacity_gbps, state_->now());
    ++state_->established_[index_of(lp.modulation)];
  }
  if (!state_->flows_.emplace(flow_, chain_).second) {
    throw std::logic_error("flow accepted twice");
  }
  done_ = true;
}

void Reservation::rollback() {
  if (done_) return;
  auto& vt = state_->virtual_topology();
  for (std::size_t i = chain_.size(); i-- > 0;) {
    if (created_[i]) {
      vt.tear_down(chain_[i]);
    } else {
      vt.remove_flow(chain_[i], flow_);
    }
  }
  chain_.clear();
  created_.clear();
  vt.restore_next_id(saved_next_id_);
  done_ = true;
}

std::vector<LightpathId> Reservation::created() const {
  std::vector<LightpathId> out;
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    if (created_[i]) out.push_back(chain_[i]);
  }
  return out;
}

}  // namespace eon::rsa
