#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "eon/energy.hpp"
#include "eon/ids.hpp"
#include "eon/modulation.hpp"
#include "eon/modulation_topology.hpp"
#include "eon/spectrum.hpp"
#include "eon/topology.hpp"
#include "eon/virtual_topology.hpp"

namespace eon {

namespace rsa {
class Reservation;
}

struct NetworkParams {
  int slots_per_fiber = 320;
  int guard_slots = 2;
  int max_slots_per_bvt = 32;
  std::size_t rsa_k = 3;        // physical candidate routes per segment
  std::size_t max_k = 3;        // ranked paths per modulation topology
  ModulationSet formats;        // available formats
};

// Everything computed off-line for one topology: physical k-shortest
// routes, one reachability graph per format and the ranked paths through
// each of them. Immutable once built; share freely across runs.
class NetworkModel {
 public:
  NetworkModel(PhysicalTopology topo, NetworkParams params);

  const PhysicalTopology& topology() const { return topo_; }
  const NetworkParams& params() const { return params_; }
  const RouteTable& routes() const { return routes_; }
  double diameter_km() const { return routes_.diameter_km(); }

  const ModulationTopology& modulation_topology(Modulation m) const;
  // Ranked s->d paths through the reachability graph of m (at most max_k).
  const std::vector<GraphPath>& modulation_paths(Modulation m, NodeId s, NodeId d) const;

 private:
  PhysicalTopology topo_;
  NetworkParams params_;
  RouteTable routes_;
  std::array<std::unique_ptr<ModulationTopology>, 6> mod_topos_;
  std::array<std::vector<std::vector<GraphPath>>, 6> mod_paths_;
};

// Mutable resources of one simulation run.
class NetworkState {
 public:
  explicit NetworkState(const NetworkModel& model);
  NetworkState(const NetworkState&) = delete;
  NetworkState& operator=(const NetworkState&) = delete;

  const NetworkModel& model() const { return *model_; }
  const SpectrumState& spectrum() const { return spectrum_; }
  const VirtualTopology& virtual_topology() const { return vt_; }
  VirtualTopology& virtual_topology() { return vt_; }
  const energy::EnergyLedger& ledger() const { return ledger_; }
  energy::EnergyLedger& ledger() { return ledger_; }

  double now() const { return now_; }
  void advance_to(double t);

  // Lightpaths committed per format over the whole run.
  const std::array<std::size_t, 6>& established_per_format() const { return established_; }
  std::size_t established_total() const;

  // Lightpath chain carrying an accepted flow.
  const std::map<FlowId, std::vector<LightpathId>>& flows() const { return flows_; }

  // Removes the flow from every lightpath of its chain, tearing down and
  // closing the energy record of any lightpath left empty. Returns the
  // torn-down lightpaths.
  std::vector<Lightpath> depart(FlowId flow);

  // Copy of every resource a request may touch, for rollback checks.
  struct Snapshot {
    std::vector<SlotGrid> grids;
    std::map<LightpathId, Lightpath> lightpaths;
    std::uint64_t next_lightpath_id = 0;
    energy::EnergyLedger ledger;
    std::array<std::size_t, 6> established{};
    std::map<FlowId, std::vector<LightpathId>> flows;

    friend bool operator==(const Snapshot&, const Snapshot&) = default;
  };
  Snapshot snapshot() const;

 private:
  friend class rsa::Reservation;

  const NetworkModel* model_;
  SpectrumState spectrum_;
  VirtualTopology vt_;
  energy::EnergyLedger ledger_;
  double now_ = 0.0;
  std::array<std::size_t, 6> established_{};
  std::map<FlowId, std::vector<LightpathId>> flows_;
};

}  // namespace eon
