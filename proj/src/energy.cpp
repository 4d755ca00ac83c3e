#include "eon/energy.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace eon::energy {

double pc_bvt(double tr_gbps) { return kBvtWattsPerGbps * tr_gbps + kBvtIdleWatts; }

double ec_oxc_setup(std::size_t node_degree, std::size_t add_drop_degree) {
  return static_cast<double>(node_degree) * kOxcSetupJoulesPerFiber +
         static_cast<double>(add_drop_degree) * kOxcSetupJoulesPerAddDrop;
}

std::size_t ola_count(const PhysicalTopology& topo, const PhysicalPath& route) {
  std::size_t n = 0;
  for (LinkId l : route.links) {
    n += static_cast<std::size_t>(std::floor(topo.link(l).length_km / kOlaSpanKm));
  }
  return n;
}

LightpathProfile lightpath_profile(const PhysicalTopology& topo, const PhysicalPath& route,
                                   double transmission_rate_gbps) {
  LightpathProfile p;
  p.oxcs = route.nodes.size();
  p.olas = ola_count(topo, route);
  for (std::size_t i = 0; i < route.nodes.size(); ++i) {
    const bool terminal = i == 0 || i + 1 == route.nodes.size();
    p.setup_joules += ec_oxc_setup(topo.degree(route.nodes[i]), terminal ? 1 : 0);
  }
  p.operating_watts = pc_bvt(transmission_rate_gbps) +
                      static_cast<double>(p.oxcs) * kOxcOperatingWatts +
                      static_cast<double>(p.olas) * kOlaWatts;
  return p;
}

double ec_lightpath(const PhysicalTopology& topo, const PhysicalPath& route,
                    double transmission_rate_gbps, double holding_s) {
  if (holding_s < 0.0) throw std::invalid_argument("holding time must be non-negative");
  const auto p = lightpath_profile(topo, route, transmission_rate_gbps);
  return p.setup_joules + p.operating_watts * holding_s;
}

double dt_flow(double tr_gbps, double holding_s) { return tr_gbps * 1e9 * holding_s; }

double energy_efficiency(double total_bits, double total_joules) {
  if (total_joules <= 0.0) return 0.0;
  return total_bits / total_joules;
}

double effective_energy_efficiency(double en_eff, double bbr) {
  if (bbr < 0.0 || bbr > 1.0) throw std::invalid_argument("bbr must lie in [0, 1]");
  return en_eff * (1.0 - bbr);
}

double EnergyLedger::Row::joules() const {
  const double held = open ? 0.0 : closed_at - opened_at;
  return profile.setup_joules + profile.operating_watts * held;
}

void EnergyLedger::open(LightpathId id, const LightpathProfile& profile, double capacity_gbps,
                        double now) {
  if (open_.contains(id)) throw std::logic_error("lightpath already open in energy ledger");
  open_.emplace(id, rows_.size());
  rows_.push_back(Row{id, profile, capacity_gbps, now, now, true});
  setup_joules_ += profile.setup_joules;
}

void EnergyLedger::close(LightpathId id, double now) {
  auto it = open_.find(id);
  if (it == open_.end()) throw std::logic_error("closing a lightpath the ledger never opened");
  Row& row = rows_[it->second];
  if (now < row.opened_at) throw std::logic_error("lightpath closed before it opened");
  row.closed_at = now;
  row.open = false;
  operating_joules_ += row.profile.operating_watts * (now - row.opened_at);
  open_.erase(it);
}

void EnergyLedger::add_flow_data(double tr_gbps, double holding_s) {
  if (holding_s < 0.0) throw std::invalid_argument("holding time must be non-negative");
  total_bits_ += dt_flow(tr_gbps, holding_s);
}

std::string EnergyLedger::to_csv() const {
  std::ostringstream os;
  os.precision(12);
  os << "lightpath,oxcs,olas,capacity_gbps,power_w,setup_j,opened_s,closed_s,energy_j\n";
  for (const auto& r : rows_) {
    os << r.lightpath.value << ',' << r.profile.oxcs << ',' << r.profile.olas << ','
       << r.capacity_gbps << ',' << r.profile.operating_watts << ',' << r.profile.setup_joules
       << ',' << r.opened_at << ',';
    if (r.open) {
      os << ",";
    } else {
      os << r.closed_at << ',' << r.joules();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace eon::energy
