#include "eon/simulator.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/students_t.hpp>

#include "eon/energy.hpp"

namespace eon::sim {

void WorkloadConfig::validate() const {
  if (bitrates_gbps.empty()) throw std::invalid_argument("bitrates must not be empty");
  if (bitrates_gbps.size() != weights.size()) {
    throw std::invalid_argument("bitrates and weights differ in length");
  }
  for (double b : bitrates_gbps) {
    if (!(b > 0.0)) throw std::invalid_argument("bitrates must be positive");
  }
  for (double w : weights) {
    if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");
  }
  if (!(mean_holding_s > 0.0)) throw std::invalid_argument("mean holding time must be positive");
  if (!(load_erlangs > 0.0)) throw std::invalid_argument("load must be positive");
}

std::vector<FlowRequest> generate_workload(const WorkloadConfig& cfg, std::size_t node_count) {
  cfg.validate();
  if (node_count < 2) throw std::invalid_argument("workload needs at least two nodes");

  std::mt19937_64 rng(cfg.seed);
  std::exponential_distribution<double> interarrival(cfg.arrival_rate());
  std::exponential_distribution<double> holding(1.0 / cfg.mean_holding_s);
  std::uniform_int_distribution<std::size_t> src(0, node_count - 1);
  std::uniform_int_distribution<std::size_t> dst(0, node_count - 2);
  std::discrete_distribution<std::size_t> rate(cfg.weights.begin(), cfg.weights.end());

  std::vector<FlowRequest> out;
  out.reserve(cfg.request_count);
  double t = 0.0;
  for (std::size_t i = 0; i < cfg.request_count; ++i) {
    t += interarrival(rng);
    FlowRequest r;
    r.id = FlowId{i};
    r.source = NodeId{src(rng)};
    std::size_t d = dst(rng);
    if (d >= r.source.index) ++d;  // uniform over nodes other than the source
    r.destination = NodeId{d};
    r.bitrate_gbps = cfg.bitrates_gbps[rate(rng)];
    r.arrival_s = t;
    r.holding_s = holding(rng);
    out.push_back(r);
  }
  return out;
}

namespace {

struct Departure {
  double time;
  std::uint64_t flow;
  bool operator>(const Departure& o) const {
    return time != o.time ? time > o.time : flow > o.flow;
  }
};

}  // namespace

RunResult run(const schemes::Scheme& scheme, const NetworkModel& model,
              std::span<const FlowRequest> requests, const RunOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  RunResult result;
  RunMetrics& m = result.metrics;
  NetworkState state(model);
  const auto& topo = model.topology();

  std::priority_queue<Departure, std::vector<Departure>, std::greater<>> departures;
  std::map<std::uint64_t, const FlowRequest*> active;

  double frag_integral = 0.0;
  double frag_value = 0.0;
  double frag_since = 0.0;
  double frag_start = 0.0;
  bool frag_open = false;
  std::size_t hop_total = 0;

  auto sample_fragmentation = [&](double t, bool counted) {
    if (frag_open) frag_integral += frag_value * (t - frag_since);
    if (counted && !frag_open) {
      frag_open = true;
      frag_start = t;
    }
    frag_value = state.spectrum().network_f_ext();
    frag_since = t;
  };

  auto log_down = [&](const std::vector<Lightpath>& torn, double t) {
    if (!options.record_events) return;
    for (const auto& lp : torn) {
      EventLogEntry e{EventLogEntry::Kind::LightpathDown, t, lp.id, {}, {}, 0.0, 0.0};
      result.events.push_back(std::move(e));
    }
  };

  auto process_departure = [&](const Departure& dep) {
    state.advance_to(dep.time);
    auto torn = state.depart(FlowId{dep.flow});
    active.erase(dep.flow);
    log_down(torn, dep.time);
    sample_fragmentation(dep.time, false);
  };

  for (std::size_t i = 0; i < requests.size(); ++i) {
    const FlowRequest& req = requests[i];
    if (i > 0 && req.arrival_s < requests[i - 1].arrival_s) {
      throw std::invalid_argument("requests must be sorted by arrival time");
    }
    while (!departures.empty() && departures.top().time <= req.arrival_s) {
      auto dep = departures.top();
      departures.pop();
      process_departure(dep);
    }

    const bool counted = i >= options.warmup_requests;
    state.advance_to(req.arrival_s);
    schemes::Request r{req.id, req.source, req.destination, req.bitrate_gbps};
    schemes::DecisionTrace trace;
    auto decision = scheme.serve(r, state, options.trace_sink ? &trace : nullptr);
    if (options.trace_sink) options.trace_sink(trace);

    if (counted) {
      ++m.offered;
      m.offered_gbps += req.bitrate_gbps;
    }
    if (decision.accepted) {
      state.ledger().add_flow_data(req.bitrate_gbps, req.holding_s);
      departures.push(Departure{req.departure_s(), req.id.value});
      active.emplace(req.id.value, &req);
      if (counted) {
        ++m.accepted;
        hop_total += decision.virtual_hops();
      }
      if (options.record_events) {
        for (LightpathId id : decision.created) {
          const Lightpath& lp = state.virtual_topology().lightpath(id);
          EventLogEntry e{EventLogEntry::Kind::LightpathUp, req.arrival_s, id, lp.route.nodes,
                          {}, lp.capacity_gbps, 0.0};
          for (LinkId l : lp.route.links) e.route_link_km.push_back(topo.link(l).length_km);
          result.events.push_back(std::move(e));
        }
        result.events.push_back(EventLogEntry{EventLogEntry::Kind::FlowAccepted, req.arrival_s,
                                              {}, {}, {}, req.bitrate_gbps, req.holding_s});
      }
    } else if (counted) {
      m.blocked_gbps += req.bitrate_gbps;
    }
    sample_fragmentation(req.arrival_s, counted);
  }
  while (!departures.empty()) {
    auto dep = departures.top();
    departures.pop();
    process_departure(dep);
  }

  if (state.virtual_topology().active_count() != 0 || state.ledger().open_count() != 0) {
    throw std::logic_error("lightpaths still active after the last departure");
  }

  m.bbr = m.offered_gbps > 0.0 ? m.blocked_gbps / m.offered_gbps : 0.0;
  m.avg_virtual_hops = m.accepted > 0 ? static_cast<double>(hop_total) / m.accepted : 0.0;
  const double span = frag_since - frag_start;
  m.avg_f_ext = frag_open && span > 0.0 ? frag_integral / span : 0.0;
  m.lightpaths_established = state.established_total();
  for (std::size_t f = 0; f < 6; ++f) {
    m.modulation_usage_pct[f] =
        m.lightpaths_established > 0
            ? 100.0 * static_cast<double>(state.established_per_format()[f]) /
                  static_cast<double>(m.lightpaths_established)
            : 0.0;
  }
  m.total_joules = state.ledger().total_joules();
  m.total_bits = state.ledger().total_bits();
  m.en_eff = state.ledger().efficiency();
  m.eee = energy::effective_energy_efficiency(m.en_eff, m.bbr);
  m.runtime_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

std::vector<std::pair<std::string, double>> metric_values(const RunMetrics& m) {
  std::vector<std::pair<std::string, double>> out{
      {"bbr", m.bbr},
      {"avg_virtual_hops", m.avg_virtual_hops},
      {"avg_f_ext", m.avg_f_ext},
      {"en_eff_bits_per_j", m.en_eff},
      {"eee_bits_per_j", m.eee},
  };
  for (Modulation f : kAllModulations) {
    out.emplace_back("mod_usage_pct_" + std::string(to_string(f)),
                     m.modulation_usage_pct[index_of(f)]);
  }
  return out;
}

MetricSummary t_interval(std::span<const double> samples, double confidence) {
  if (samples.size() < 2) throw std::invalid_argument("t interval needs at least two samples");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie in (0, 1)");
  }
  const double n = static_cast<double>(samples.size());
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  boost::math::students_t dist(n - 1.0);
  const double t = boost::math::quantile(dist, 0.5 + confidence / 2.0);
  return MetricSummary{mean, t * sd / std::sqrt(n), samples.size()};
}

ReplicationResult replicate(const schemes::Scheme& scheme, const NetworkModel& model,
                            const WorkloadConfig& cfg, std::size_t n_reps, std::size_t threads,
                            const RunOptions& options) {
  if (n_reps < 2) throw std::invalid_argument("replication needs at least two runs");
  cfg.validate();
  ReplicationResult out;
  out.runs.resize(n_reps);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n_reps; i = next++) {
      try {
        WorkloadConfig rep = cfg;
        rep.seed = cfg.seed + i;
        auto requests = generate_workload(rep, model.topology().node_count());
        out.runs[i] = run(scheme, model, requests, options).metrics;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(threads, n_reps));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  const auto names = metric_values(out.runs.front());
  for (std::size_t k = 0; k < names.size(); ++k) {
    std::vector<double> xs;
    for (const auto& r : out.runs) xs.push_back(metric_values(r)[k].second);
    out.summary[names[k].first] = t_interval(xs);
  }
  return out;
}

}  // namespace eon::sim
