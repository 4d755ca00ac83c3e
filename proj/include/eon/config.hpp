#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eon/modulation.hpp"
#include "eon/network.hpp"
#include "eon/schemes.hpp"
#include "eon/simulator.hpp"

namespace eon::config {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Every knob of an experiment, unset fields taking defaults on validation.
// Config files are JSON objects whose keys are the field names below.
struct PartialConfig {
  std::optional<std::string> topology;
  std::optional<std::vector<std::string>> schemes;
  std::optional<std::vector<double>> loads;
  std::optional<long long> reps;
  std::optional<long long> seed;
  std::optional<long long> requests;
  std::optional<double> mean_holding_s;
  std::optional<long long> slots;
  std::optional<long long> guard;
  std::optional<long long> max_slots_per_bvt;
  std::optional<long long> k;        // physical routes per segment
  std::optional<long long> max_k;    // ranked reachability paths
  std::optional<long long> amms_mhc;
  std::optional<std::vector<std::string>> formats;
  std::optional<long long> warmup;
  std::optional<long long> threads;
};

struct ExperimentConfig {
  std::string topology;
  std::vector<schemes::SchemeKind> schemes{schemes::SchemeKind::Dmmas};
  std::vector<double> loads{100.0};
  std::size_t reps = 5;
  std::uint64_t seed = 1;
  std::size_t requests = 100000;
  double mean_holding_s = 600.0;
  NetworkParams network;
  schemes::SchemeOptions scheme_options;
  std::size_t warmup = 0;
  std::size_t threads = 1;
};

PartialConfig parse_config_json(std::string_view document);
// Fields set in `overrides` replace those in `base`.
PartialConfig merge(PartialConfig base, const PartialConfig& overrides);
// Fills defaults and checks ranges; throws ConfigError listing every problem.
ExperimentConfig validate_config(const PartialConfig& cfg);

// "50:500:50" (inclusive range), "50,100,200" or a single value.
std::vector<double> parse_loads(std::string_view spec);
// "all" or a comma-separated list of scheme names.
std::vector<std::string> parse_scheme_list(std::string_view spec);

}  // namespace eon::config
