#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "eon/ids.hpp"
#include "eon/modulation.hpp"
#include "eon/network.hpp"

namespace eon::rsa {

// Carry the segment on an existing lightpath.
struct GroomPlan {
  LightpathId lightpath;
};

// Establish a new lightpath. `route` points into the model's route table.
struct NewLightpathPlan {
  const PhysicalPath* route = nullptr;
  SpectrumBlock block;
  Modulation modulation = Modulation::BPSK;
};

using SegmentPlan = std::variant<GroomPlan, NewLightpathPlan>;

// Two-step KSP-FF for one segment: groom onto an existing s->d lightpath if
// possible, otherwise try the k shortest physical routes in order, skipping
// routes beyond the reach of m, and first-fit the footprint. nullopt when
// nothing fits. Reads the state only.
std::optional<SegmentPlan> serve_segment(const NetworkState& state, NodeId s, NodeId d,
                                         double bitrate_gbps, Modulation m, std::size_t k);

// Tentative application of segment plans for one request. Destruction
// without commit() rolls every change back, leaving the state exactly as it
// was before the first apply().
class Reservation {
 public:
  Reservation(NetworkState& state, FlowId flow, double bitrate_gbps);
  ~Reservation();
  Reservation(const Reservation&) = delete;
  Reservation& operator=(const Reservation&) = delete;

  LightpathId apply(const SegmentPlan& plan);
  // Registers the flow's chain, opens energy records of new lightpaths and
  // counts them per format.
  void commit();
  void rollback();

  const std::vector<LightpathId>& chain() const { return chain_; }
  std::vector<LightpathId> created() const;

 private:
  NetworkState* state_;
  FlowId flow_;
  double bitrate_;
  std::uint64_t saved_next_id_;
  std::vector<LightpathId> chain_;
  std::vector<bool> created_;
  bool done_ = false;
};

}  // namespace eon::rsa
