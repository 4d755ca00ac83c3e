#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "eon/ids.hpp"
#include "eon/network.hpp"
#include "eon/schemes.hpp"

namespace eon::sim {

struct WorkloadConfig {
  std::size_t request_count = 100000;
  std::vector<double> bitrates_gbps{25, 50, 100, 200, 300, 400};
  std::vector<double> weights{6, 5, 4, 3, 2, 1};
  double mean_holding_s = 600.0;
  double load_erlangs = 100.0;
  std::uint64_t seed = 1;

  // Throws std::invalid_argument describing the first bad field.
  void validate() const;
  double arrival_rate() const { return load_erlangs / mean_holding_s; }
};

struct FlowRequest {
  FlowId id;
  NodeId source;
  NodeId destination;
  double bitrate_gbps = 0.0;
  double arrival_s = 0.0;
  double holding_s = 0.0;

  double departure_s() const { return arrival_s + holding_s; }
};

// Poisson arrivals, exponential holding times, uniform ordered node pairs
// and weighted bitrates. Same config and node count give the same stream.
std::vector<FlowRequest> generate_workload(const WorkloadConfig& cfg, std::size_t node_count);

struct RunMetrics {
  double bbr = 0.0;
  double avg_virtual_hops = 0.0;
  double avg_f_ext = 0.0;
  std::array<double, 6> modulation_usage_pct{};  // indexed by index_of(Modulation)
  double en_eff = 0.0;
  double eee = 0.0;
  double runtime_s = 0.0;

  std::size_t offered = 0;
  std::size_t accepted = 0;
  double offered_gbps = 0.0;
  double blocked_gbps = 0.0;
  std::size_t lightpaths_established = 0;
  double total_joules = 0.0;
  double total_bits = 0.0;
};

// Lightpath and flow lifecycle, recorded on request for audits.
struct EventLogEntry {
  enum class Kind { LightpathUp, LightpathDown, FlowAccepted };
  Kind kind;
  double time_s = 0.0;
  LightpathId lightpath;
  std::vector<NodeId> route_nodes;     // LightpathUp
  std::vector<double> route_link_km;   // LightpathUp
  double rate_gbps = 0.0;              // capacity (LightpathUp) or bitrate (FlowAccepted)
  double holding_s = 0.0;              // FlowAccepted
};

struct RunOptions {
  // Arrivals excluded from BBR, hop and fragmentation statistics.
  std::size_t warmup_requests = 0;
  bool record_events = false;
  std::function<void(const schemes::DecisionTrace&)> trace_sink;
};

struct RunResult {
  RunMetrics metrics;
  std::vector<EventLogEntry> events;
};

// Processes the requests in time order against a fresh network state and
// drains every departure before returning, so all lightpaths are torn down.
RunResult run(const schemes::Scheme& scheme, const NetworkModel& model,
              std::span<const FlowRequest> requests, const RunOptions& options = {});

// Named metric values in a stable order, as written to result files.
std::vector<std::pair<std::string, double>> metric_values(const RunMetrics& m);

struct MetricSummary {
  double mean = 0.0;
  double half_width = 0.0;  // Student-t, two-sided
  std::size_t n = 0;
};

// Throws std::invalid_argument with fewer than two samples.
MetricSummary t_interval(std::span<const double> samples, double confidence = 0.95);

struct ReplicationResult {
  std::map<std::string, MetricSummary> summary;
  std::vector<RunMetrics> runs;
};

// Independent replications with seeds cfg.seed, cfg.seed + 1, ...; runs
// fan out over `threads` workers and results are ordered by replication.
ReplicationResult replicate(const schemes::Scheme& scheme, const NetworkModel& model,
                            const WorkloadConfig& cfg, std::size_t n_reps,
                            std::size_t threads = 1, const RunOptions& options = {});

}  // namespace eon::sim
