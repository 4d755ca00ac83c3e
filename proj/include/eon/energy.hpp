#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "eon/ids.hpp"
#include "eon/topology.hpp"

namespace eon::energy {

inline constexpr double kBvtWattsPerGbps = 1.683;
inline constexpr double kBvtIdleWatts = 91.333;
inline constexpr double kOxcSetupJoulesPerFiber = 85.0;
inline constexpr double kOxcSetupJoulesPerAddDrop = 100.0;
inline constexpr double kOxcOperatingWatts = 150.0;
inline constexpr double kOlaWatts = 100.0;
inline constexpr double kOlaSpanKm = 80.0;

// Transponder draw at a given line rate, overload margin included.
double pc_bvt(double tr_gbps);

// One-off switch configuration energy of a cross-connect with `node_degree`
// attached fibers and `add_drop_degree` locally added/dropped channels.
double ec_oxc_setup(std::size_t node_degree, std::size_t add_drop_degree);

// Amplifiers on a route: floor(length / 80 km) per traversed link.
std::size_t ola_count(const PhysicalTopology& topo, const PhysicalPath& route);

// Static energy description of one lightpath. Every node on the route is a
// cross-connect; the two terminating ones add/drop one channel each.
struct LightpathProfile {
  std::size_t oxcs = 0;
  std::size_t olas = 0;
  double setup_joules = 0.0;
  double operating_watts = 0.0;

  friend bool operator==(const LightpathProfile&, const LightpathProfile&) = default;
};

LightpathProfile lightpath_profile(const PhysicalTopology& topo, const PhysicalPath& route,
                                   double transmission_rate_gbps);

// Setup plus operating energy over `holding_s` seconds. Throws
// std::invalid_argument for a negative holding time.
double ec_lightpath(const PhysicalTopology& topo, const PhysicalPath& route,
                    double transmission_rate_gbps, double holding_s);

double dt_flow(double tr_gbps, double holding_s);

// Bits per joule; 0 for an empty ledger.
double energy_efficiency(double total_bits, double total_joules);
double effective_energy_efficiency(double en_eff, double bbr);

class EnergyLedger {
 public:
  struct Row {
    LightpathId lightpath;
    LightpathProfile profile;
    double capacity_gbps = 0.0;
    double opened_at = 0.0;
    double closed_at = 0.0;
    bool open = true;

    double joules() const;
    friend bool operator==(const Row&, const Row&) = default;
  };

  void open(LightpathId id, const LightpathProfile& profile, double capacity_gbps, double now);
  void close(LightpathId id, double now);
  void add_flow_data(double tr_gbps, double holding_s);

  double setup_joules() const { return setup_joules_; }
  double operating_joules() const { return operating_joules_; }
  double total_joules() const { return setup_joules_ + operating_joules_; }
  double total_bits() const { return total_bits_; }
  double efficiency() const { return energy_efficiency(total_bits_, total_joules()); }
  std::size_t open_count() const { return open_.size(); }
  const std::vector<Row>& rows() const { return rows_; }

  // Delimited export, one row per lightpath:
  // lightpath,oxcs,olas,capacity_gbps,power_w,setup_j,opened_s,closed_s,energy_j
  std::string to_csv() const;

  friend bool operator==(const EnergyLedger&, const EnergyLedger&) = default;

 private:
  std::vector<Row> rows_;
  std::map<LightpathId, std::size_t> open_;
  double setup_joules_ = 0.0;
  double operating_joules_ = 0.0;
  double total_bits_ = 0.0;
};

}  // namespace eon::energy
