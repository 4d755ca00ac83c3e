#include "eon/config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace eon::config {

namespace {

using nlohmann::json;

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double to_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("not a number: \"" + s + "\"");
  }
  if (used != s.size()) throw ConfigError("not a number: \"" + s + "\"");
  return v;
}

template <typename T>
void read(const json& j, const char* key, std::optional<T>& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config key \"") + key + "\" has the wrong type");
  }
}

template <typename T>
void take(std::optional<T>& into, const std::optional<T>& from) {
  if (from) into = from;
}

}  // namespace

PartialConfig parse_config_json(std::string_view document) {
  json j;
  try {
    j = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config file: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  static const std::vector<std::string> known{
      "topology", "schemes", "loads", "reps",     "seed",   "requests",
      "mean_holding_s", "slots", "guard", "max_slots_per_bvt", "k", "max_k",
      "amms_mhc", "formats", "warmup", "threads"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError("unknown config key \"" + key + "\"");
    }
  }
  PartialConfig c;
  read(j, "topology", c.topology);
  if (j.contains("schemes") && j["schemes"].is_string()) {
    c.schemes = parse_scheme_list(j["schemes"].get<std::string>());
  } else {
    read(j, "schemes", c.schemes);
  }
  if (j.contains("loads") && j["loads"].is_string()) {
    c.loads = parse_loads(j["loads"].get<std::string>());
  } else {
    read(j, "loads", c.loads);
  }
  read(j, "reps", c.reps);
  read(j, "seed", c.seed);
  read(j, "requests", c.requests);
  read(j, "mean_holding_s", c.mean_holding_s);
  read(j, "slots", c.slots);
  read(j, "guard", c.guard);
  read(j, "max_slots_per_bvt", c.max_slots_per_bvt);
  read(j, "k", c.k);
  read(j, "max_k", c.max_k);
  read(j, "amms_mhc", c.amms_mhc);
  read(j, "formats", c.formats);
  read(j, "warmup", c.warmup);
  read(j, "threads", c.threads);
  return c;
}

PartialConfig merge(PartialConfig base, const PartialConfig& o) {
  take(base.topology, o.topology);
  take(base.schemes, o.schemes);
  take(base.loads, o.loads);
  take(base.reps, o.reps);
  take(base.seed, o.seed);
  take(base.requests, o.requests);
  take(base.mean_holding_s, o.mean_holding_s);
  take(base.slots, o.slots);
  take(base.guard, o.guard);
  take(base.max_slots_per_bvt, o.max_slots_per_bvt);
  take(base.k, o.k);
  take(base.max_k, o.max_k);
  take(base.amms_mhc, o.amms_mhc);
  take(base.formats, o.formats);
  take(base.warmup, o.warmup);
  take(base.threads, o.threads);
  return base;
}

ExperimentConfig validate_config(const PartialConfig& c) {
  ExperimentConfig out;
  std::vector<std::string> errors;
  auto positive = [&](const std::optional<long long>& v, const char* name, auto& field,
                      long long min) {
    if (!v) return;
    if (*v < min) {
      errors.push_back(std::string(name) + " must be >= " + std::to_string(min));
    } else {
      field = static_cast<std::remove_reference_t<decltype(field)>>(*v);
    }
  };

  if (c.topology) out.topology = *c.topology;
  if (c.schemes) {
    out.schemes.clear();
    for (const auto& name : *c.schemes) {
      if (auto k = schemes::parse_scheme(name)) {
        if (std::find(out.schemes.begin(), out.schemes.end(), *k) == out.schemes.end()) {
          out.schemes.push_back(*k);
        }
      } else {
        errors.push_back("unknown scheme \"" + name + "\"");
      }
    }
    if (c.schemes->empty()) errors.push_back("at least one scheme is required");
  }
  if (c.loads) {
    if (c.loads->empty()) errors.push_back("at least one load is required");
    for (double l : *c.loads) {
      if (!(l > 0.0)) errors.push_back("loads must be positive");
    }
    out.loads = *c.loads;
  }
  positive(c.reps, "reps", out.reps, 2);
  if (c.seed) {
    if (*c.seed < 0) {
      errors.push_back("seed must be >= 0");
    } else {
      out.seed = static_cast<std::uint64_t>(*c.seed);
    }
  }
  positive(c.requests, "requests", out.requests, 1);
  if (c.mean_holding_s) {
    if (!(*c.mean_holding_s > 0.0)) {
      errors.push_back("mean_holding_s must be positive");
    } else {
      out.mean_holding_s = *c.mean_holding_s;
    }
  }
  positive(c.slots, "slots", out.network.slots_per_fiber, 1);
  positive(c.guard, "guard", out.network.guard_slots, 0);
  positive(c.max_slots_per_bvt, "max_slots_per_bvt", out.network.max_slots_per_bvt, 1);
  positive(c.k, "k", out.network.rsa_k, 1);
  positive(c.max_k, "max_k", out.network.max_k, 1);
  positive(c.amms_mhc, "amms_mhc", out.scheme_options.amms_mhc, 1);
  positive(c.warmup, "warmup", out.warmup, 0);
  positive(c.threads, "threads", out.threads, 1);
  if (c.formats) {
    std::vector<Modulation> fs;
    for (const auto& name : *c.formats) {
      if (auto m = parse_modulation(name)) {
        fs.push_back(*m);
      } else {
        errors.push_back("unknown modulation format \"" + name + "\"");
      }
    }
    if (c.formats->empty()) errors.push_back("at least one modulation format is required");
    if (!fs.empty()) out.network.formats = ModulationSet(fs);
  }

  if (!errors.empty()) {
    std::ostringstream os;
    os << "invalid configuration:";
    for (const auto& e : errors) os << "\n  " << e;
    throw ConfigError(os.str());
  }
  return out;
}

std::vector<double> parse_loads(std::string_view spec) {
  if (spec.find(':') != std::string_view::npos) {
    auto parts = split(spec, ':');
    if (parts.size() != 3) throw ConfigError("load range must be start:stop:step");
    const double start = to_number(parts[0]);
    const double stop = to_number(parts[1]);
    const double step = to_number(parts[2]);
    if (!(step > 0.0) || stop < start) throw ConfigError("load range must be increasing");
    std::vector<double> out;
    const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
    for (long long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
  std::vector<double> out;
  for (const auto& p : split(spec, ',')) out.push_back(to_number(p));
  return out;
}

std::vector<std::string> parse_scheme_list(std::string_view spec) {
  if (spec == "all") {
    std::vector<std::string> out;
    for (auto k : schemes::kAllSchemes) out.emplace_back(schemes::to_string(k));
    return out;
  }
  return split(spec, ',');
}

}  // namespace eon::config
