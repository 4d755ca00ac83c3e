#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eon/ids.hpp"
#include "eon/modulation.hpp"
#include "eon/network.hpp"

namespace eon::schemes {

struct Request {
  FlowId flow;
  NodeId source;
  NodeId destination;
  double bitrate_gbps = 0.0;
};

// One segment of a multi-hop solution: a reachability-graph edge, the
// physical path behind it and the format the segment will be served with.
struct SubPath {
  NodeId from;
  NodeId to;
  const PhysicalPath* path = nullptr;
  Modulation modulation = Modulation::BPSK;
};
using SubPathSet = std::vector<SubPath>;

// k-th ranked path (1-based) from s to d through the reachability graph of
// M, split into one segment per edge, every segment tagged M. nullopt when
// fewer than k paths exist.
std::optional<SubPathSet> omega(const NetworkModel& model, NodeId s, NodeId d, std::size_t k,
                                Modulation M);

// Upper bound on segments per request from the network diameter, the
// normalized entropy fragmentation and the reach of the best format.
int compute_mhc(double diameter_km, double f_ent_normalized, double best_reach_km);
int compute_mhc(const NetworkState& state);

// Raises every segment to the most efficient available format whose reach
// covers it, never going below M.
SubPathSet spec_eff(SubPathSet segments, Modulation M, const ModulationSet& formats);

enum class AttemptOutcome { NoPath, ExceedsMhc, SpectrumBlocked, Accepted };
std::string_view to_string(AttemptOutcome o);

struct Attempt {
  Modulation modulation = Modulation::BPSK;
  std::size_t k = 1;
  AttemptOutcome outcome = AttemptOutcome::NoPath;
  // Segment endpoints and formats as tried (empty for NoPath).
  std::vector<std::pair<NodeId, NodeId>> segments;
  std::vector<Modulation> segment_modulations;
  friend bool operator==(const Attempt&, const Attempt&) = default;
};

struct DecisionTrace {
  std::string scheme;
  Request request;
  std::optional<int> mhc;
  std::vector<Attempt> attempts;
  bool accepted = false;

  std::string to_json() const;
};

struct Decision {
  bool accepted = false;
  std::vector<LightpathId> chain;
  std::vector<Modulation> segment_modulations;
  std::vector<LightpathId> created;  // lightpaths established for this request

  std::size_t virtual_hops() const { return chain.size(); }
};

class Scheme {
 public:
  virtual ~Scheme() = default;
  virtual std::string_view name() const = 0;
  // Accepted requests are committed to `state`; blocked ones leave it
  // untouched.
  virtual Decision serve(const Request& r, NetworkState& state,
                         DecisionTrace* trace = nullptr) const = 0;
};

enum class SchemeKind { MAdap, Amms, Eems, Dmmas, DmmasWoMhc };

inline constexpr std::array<SchemeKind, 5> kAllSchemes{
    SchemeKind::MAdap, SchemeKind::Amms, SchemeKind::Eems, SchemeKind::Dmmas,
    SchemeKind::DmmasWoMhc};

std::string_view to_string(SchemeKind k);
std::optional<SchemeKind> parse_scheme(std::string_view name);  // case-insensitive

struct SchemeOptions {
  int amms_mhc = 3;
};

std::unique_ptr<Scheme> make_scheme(SchemeKind kind, const SchemeOptions& options = {});

// Multi-hop engines share one loop; these knobs select the variant.
class MultiHopScheme final : public Scheme {
 public:
  enum class HopLimit { Dynamic, Static, None };

  MultiHopScheme(std::string name, HopLimit limit, int static_mhc, bool per_segment_formats);

  std::string_view name() const override { return name_; }
  Decision serve(const Request& r, NetworkState& state,
                 DecisionTrace* trace = nullptr) const override;

 private:
  std::string name_;
  HopLimit limit_;
  int static_mhc_;
  bool per_segment_formats_;
};

// Single-hop, most efficient feasible format first.
class MAdapScheme final : public Scheme {
 public:
  std::string_view name() const override { return "mAdap"; }
  Decision serve(const Request& r, NetworkState& state,
                 DecisionTrace* trace = nullptr) const override;
};

// Single-hop; takes the mAdap route and slot count, then drops to the
// least efficient format that needs no more slots on that route.
class EemsScheme final : public Scheme {
 public:
  std::string_view name() const override { return "EEMS"; }
  Decision serve(const Request& r, NetworkState& state,
                 DecisionTrace* trace = nullptr) const override;
};

}  // namespace eon::schemes
