#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eon/ids.hpp"
#include "eon/modulation.hpp"
#include "eon/spectrum.hpp"
#include "eon/topology.hpp"

namespace eon {

class CapacityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Lightpath {
  LightpathId id;
  PhysicalPath route;
  SpectrumBlock block;
  Modulation modulation = Modulation::BPSK;
  double capacity_gbps = 0.0;
  double used_gbps = 0.0;
  std::vector<std::pair<FlowId, double>> flows;  // flow, bitrate
  double established_at = 0.0;

  NodeId source() const { return route.source(); }
  NodeId destination() const { return route.destination(); }
  double residual_gbps() const { return capacity_gbps - used_gbps; }
  double utilization() const { return used_gbps / capacity_gbps; }

  friend bool operator==(const Lightpath&, const Lightpath&) = default;
};

// Established lightpaths of one run and the electrical grooming of flows
// onto them. Owns the lightpath <-> spectrum correspondence: establishing
// allocates the footprint, tear-down releases it.
class VirtualTopology {
 public:
  VirtualTopology(SpectrumState& spectrum, int max_slots_per_bvt = 32);

  // Allocates `block` on every fiber of `route` and registers a lightpath
  // with no flows yet. Throws CapacityError beyond the transponder limit or
  // when the route exceeds the modulation reach, SpectrumError on collision.
  LightpathId establish(const PhysicalPath& route, const SpectrumBlock& block, Modulation m,
                        double now);

  // Least-utilized active lightpath from s to d able to take `bitrate_gbps`;
  // ties go to the lower id.
  std::optional<LightpathId> groom(NodeId s, NodeId d, double bitrate_gbps) const;

  void add_flow(LightpathId id, FlowId flow, double bitrate_gbps);
  // Returns the torn-down lightpath when this removed its last flow.
  std::optional<Lightpath> remove_flow(LightpathId id, FlowId flow);
  // Tears down a lightpath regardless of its flows (used to undo a
  // tentative establishment). Releases its spectrum.
  Lightpath tear_down(LightpathId id);

  const Lightpath& lightpath(LightpathId id) const;
  bool contains(LightpathId id) const { return active_.contains(id); }
  std::size_t active_count() const { return active_.size(); }
  const std::map<LightpathId, Lightpath>& active() const { return active_; }
  int max_slots_per_bvt() const { return max_slots_; }

  // Id the next establish() will use; restoring it is part of rollback.
  std::uint64_t next_id() const { return next_id_; }
  void restore_next_id(std::uint64_t id) { next_id_ = id; }

  friend bool operator==(const VirtualTopology& a, const VirtualTopology& b) {
    return a.active_ == b.active_ && a.next_id_ == b.next_id_;
  }

 private:
  using PairKey = std::pair<std::uint32_t, std::uint32_t>;

  SpectrumState* spectrum_;
  int max_slots_;
  std::uint64_t next_id_ = 0;
  std::map<LightpathId, Lightpath> active_;
  std::map<PairKey, std::vector<LightpathId>> by_pair_;
};

}  // namespace eon
