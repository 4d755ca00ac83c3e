// eonsim: load-sweep driver for the elastic optical network simulator.
//
//   eonsim simulate --topology data/usa24.json --scheme dmmas --loads 50:500:50
//                   --reps 5 --out results.csv
//   eonsim topology data/german27.json

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "eon/config.hpp"
#include "eon/modulation_topology.hpp"
#include "eon/simulator.hpp"
#include "eon/topology_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Row {
  std::string scheme;
  double load;
  std::string metric;
  double mean;
  double ci_halfwidth;
  std::size_t reps;
  std::uint64_t seed_base;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_csv(const std::string& path, const std::vector<Row>& rows) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << "scheme,load,metric,mean,ci_halfwidth,reps,seed_base\n";
  for (const auto& r : rows) {
    out << r.scheme << ',' << fmt(r.load) << ',' << r.metric << ',' << fmt(r.mean) << ','
        << fmt(r.ci_halfwidth) << ',' << r.reps << ',' << r.seed_base << '\n';
  }
}

void write_json(const std::string& path, const std::vector<Row>& rows,
                const eon::config::ExperimentConfig& cfg) {
  nlohmann::json j;
  j["topology"] = cfg.topology;
  j["requests"] = cfg.requests;
  j["reps"] = cfg.reps;
  j["seed_base"] = cfg.seed;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"scheme", r.scheme},
                         {"load", r.load},
                         {"metric", r.metric},
                         {"mean", r.mean},
                         {"ci_halfwidth", r.ci_halfwidth},
                         {"reps", r.reps},
                         {"seed_base", r.seed_base}});
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << '\n';
}

int simulate(const eon::config::PartialConfig& flags, const std::string& config_path,
             const std::string& out_csv, const std::string& out_json,
             const std::string& trace_path, bool quiet) {
  using namespace eon;
  config::PartialConfig partial;
  if (!config_path.empty()) partial = config::parse_config_json(read_file(config_path));
  partial = config::merge(std::move(partial), flags);
  const auto cfg = config::validate_config(partial);
  if (cfg.topology.empty()) throw UsageError("--topology is required");
  if (out_csv.empty()) throw UsageError("--out is required");

  NetworkModel model(load_topology(cfg.topology), cfg.network);

  std::ofstream trace_out;
  std::mutex trace_mutex;
  sim::RunOptions options;
  options.warmup_requests = cfg.warmup;
  if (!trace_path.empty()) {
    trace_out.open(trace_path);
    if (!trace_out) throw UsageError("cannot write " + trace_path);
    options.trace_sink = [&](const schemes::DecisionTrace& t) {
      std::lock_guard lock(trace_mutex);
      trace_out << t.to_json() << '\n';
    };
  }

  std::vector<Row> rows;
  for (auto kind : cfg.schemes) {
    auto scheme = schemes::make_scheme(kind, cfg.scheme_options);
    for (double load : cfg.loads) {
      sim::WorkloadConfig w;
      w.request_count = cfg.requests;
      w.mean_holding_s = cfg.mean_holding_s;
      w.load_erlangs = load;
      w.seed = cfg.seed;
      auto result = sim::replicate(*scheme, model, w, cfg.reps, cfg.threads, options);
      for (const auto& [metric, s] : result.summary) {
        rows.push_back(Row{std::string(scheme->name()), load, metric, s.mean, s.half_width,
                           cfg.reps, cfg.seed});
      }
      if (!quiet) {
        std::cerr << scheme->name() << " load " << fmt(load) << ": bbr "
                  << fmt(result.summary.at("bbr").mean) << ", hops "
                  << fmt(result.summary.at("avg_virtual_hops").mean) << '\n';
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.scheme, a.load, a.metric) < std::tie(b.scheme, b.load, b.metric);
  });
  write_csv(out_csv, rows);
  if (!out_json.empty()) write_json(out_json, rows, cfg);
  return kExitOk;
}

int describe(const std::string& path) {
  using namespace eon;
  const auto topo = load_topology(path);
  const RouteTable routes(topo, 1);
  std::cout << "nodes       " << topo.node_count() << '\n'
            << "links       " << topo.link_count() << '\n'
            << "diameter_km " << fmt(routes.diameter_km()) << '\n';
  for (Modulation m : kAllModulations) {
    ModulationTopology mt(routes, topo.node_count(), m);
    std::cout << "edges " << to_string(m) << ' ' << mt.edge_count() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elastic optical network simulator"};
  app.require_subcommand(1);

  eon::config::PartialConfig flags;
  std::string config_path, out_csv, out_json, trace_path, scheme_spec, load_spec;
  std::string topology;
  bool quiet = false;
  long long reps = 0, seed = 0, requests = 0, threads = 0, warmup = 0, amms_mhc = 0;
  long long slots = 0, guard = 0, k = 0, max_k = 0;

  auto* sim = app.add_subcommand("simulate", "Run a load sweep and write mean and 95% CI per metric");
  sim->add_option("--topology", topology, "Topology JSON file");
  sim->add_option("--config", config_path, "JSON config file; flags override its values");
  sim->add_option("--scheme", scheme_spec, "mAdap, AMMS, EEMS, DMMAS, DMMASwoMHC, a comma list or 'all'");
  sim->add_option("--loads", load_spec, "start:stop:step or comma list, in Erlang");
  auto* o_reps = sim->add_option("--reps", reps, "Replications per load (>= 2)");
  auto* o_seed = sim->add_option("--seed", seed, "Seed of the first replication");
  auto* o_req = sim->add_option("--requests", requests, "Requests per replication");
  auto* o_thr = sim->add_option("--threads", threads, "Worker threads");
  auto* o_warm = sim->add_option("--warmup", warmup, "Leading requests excluded from statistics");
  auto* o_amms = sim->add_option("--amms-mhc", amms_mhc, "AMMS segment limit");
  auto* o_slots = sim->add_option("--slots", slots, "Slots per fiber");
  auto* o_guard = sim->add_option("--guard", guard, "Guard slots between lightpaths");
  auto* o_k = sim->add_option("--k", k, "Physical routes tried per segment");
  auto* o_maxk = sim->add_option("--max-k", max_k, "Ranked reachability paths per format");
  sim->add_option("--out", out_csv, "CSV output file");
  sim->add_option("--json", out_json, "Optional JSON mirror of the CSV");
  sim->add_option("--trace", trace_path, "Optional JSON-lines decision trace");
  sim->add_flag("--quiet", quiet, "No progress on stderr");

  auto* topo_cmd = app.add_subcommand("topology", "Summarize a topology file");
  std::string describe_path;
  topo_cmd->add_option("file", describe_path, "Topology JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*topo_cmd) return describe(describe_path);

    if (!topology.empty()) flags.topology = topology;
    if (!scheme_spec.empty()) flags.schemes = eon::config::parse_scheme_list(scheme_spec);
    if (!load_spec.empty()) flags.loads = eon::config::parse_loads(load_spec);
    auto set = [](CLI::Option* o, long long v, std::optional<long long>& field) {
      if (o->count() > 0) field = v;
    };
    set(o_reps, reps, flags.reps);
    set(o_seed, seed, flags.seed);
    set(o_req, requests, flags.requests);
    set(o_thr, threads, flags.threads);
    set(o_warm, warmup, flags.warmup);
    set(o_amms, amms_mhc, flags.amms_mhc);
    set(o_slots, slots, flags.slots);
    set(o_guard, guard, flags.guard);
    set(o_k, k, flags.k);
    set(o_maxk, max_k, flags.max_k);
    return simulate(flags, config_path, out_csv, out_json, trace_path, quiet);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const eon::config::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const eon::TopologyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
