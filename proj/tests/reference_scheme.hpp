#pragma once
// Reference multi-hop decision procedure built from brute-force pieces only:
// enumerated simple paths, raw slot bitmaps and exhaustive first fit. Used to
// predict the attempt sequence the library records for one request.

#include <cmath>
#include <optional>
#include <vector>

#include "eon/network.hpp"
#include "eon/schemes.hpp"
#include "oracles.hpp"

namespace oracle {

struct RefAttempt {
  eon::Modulation M;
  std::size_t k;
  eon::schemes::AttemptOutcome outcome;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> segments;
  std::vector<eon::Modulation> formats;
};

enum class HopRule { Dynamic, Static, None };

class ReferenceMultiHop {
 public:
  ReferenceMultiHop(std::size_t n, std::vector<RefLink> links, std::size_t max_k,
                    std::size_t rsa_k)
      : n_(n), links_(std::move(links)), max_k_(max_k), rsa_k_(rsa_k) {
    const auto arcs = both_directions(links_);
    paths_.assign(n_ * n_, {});
    for (std::uint32_t s = 0; s < n_; ++s)
      for (std::uint32_t d = 0; d < n_; ++d)
        if (s != d) paths_[s * n_ + d] = all_simple_paths(n_, arcs, s, d);
    diameter_ = 0.0;
    for (const auto& p : paths_)
      if (!p.empty()) diameter_ = std::max(diameter_, p.front().cost);
  }

  double diameter() const { return diameter_; }

  int mhc(const eon::NetworkState& state) const {
    const auto& sp = state.spectrum();
    const int S = sp.slots_per_fiber();
    const double bound = std::log(std::max(S / 2.0, 2.0));
    double sum = 0.0;
    for (std::size_t f = 0; f < sp.fiber_count(); ++f) sum += ref_f_ent(to_bits(sp.grid(f))) / bound;
    double fn = sum / static_cast<double>(sp.fiber_count());
    fn = std::clamp(fn, 1e-6, 1.0);
    return std::max(1, static_cast<int>(std::ceil(diameter_ * fn / 250.0)));
  }

  // Ranked paths through the reachability graph of M.
  std::vector<RefPath> ranked(eon::Modulation M, std::uint32_t s, std::uint32_t d) const {
    std::vector<RefArc> arcs;
    for (std::uint32_t u = 0; u < n_; ++u)
      for (std::uint32_t v = 0; v < n_; ++v) {
        if (u == v) continue;
        const auto& p = paths_[u * n_ + v];
        if (!p.empty() && p.front().cost <= eon::format_of(M).reach_km)
          arcs.push_back({u, v, p.front().cost});
      }
    auto all = all_simple_paths(n_, arcs, s, d);
    if (all.size() > max_k_) all.resize(max_k_);
    return all;
  }

  std::vector<RefAttempt> predict(const eon::NetworkState& state, std::uint32_t s,
                                  std::uint32_t d, double b, HopRule rule,
                                  int static_mhc, bool per_segment) const {
    using Out = eon::schemes::AttemptOutcome;
    std::optional<int> limit;
    if (rule == HopRule::Dynamic) limit = mhc(state);
    if (rule == HopRule::Static) limit = static_mhc;
    std::vector<RefAttempt> out;
    for (int bits = 6; bits >= 1; --bits) {
      const auto M = static_cast<eon::Modulation>(bits);
      const auto paths = ranked(M, s, d);
      for (std::size_t k = 1; k <= max_k_; ++k) {
        RefAttempt a{M, k, Out::NoPath, {}, {}};
        if (k > paths.size()) {
          out.push_back(a);
          continue;
        }
        const auto& p = paths[k - 1];
        for (std::size_t h = 0; h + 1 < p.nodes.size(); ++h) {
          const auto u = p.nodes[h], v = p.nodes[h + 1];
          a.segments.emplace_back(u, v);
          eon::Modulation m = M;
          if (per_segment) {
            const double km = paths_[u * n_ + v].front().cost;
            for (int hi = 6; hi > bits; --hi) {
              if (km <= eon::format_of(static_cast<eon::Modulation>(hi)).reach_km) {
                m = static_cast<eon::Modulation>(hi);
                break;
              }
            }
          }
          a.formats.push_back(m);
        }
        if (limit && a.segments.size() > static_cast<std::size_t>(*limit)) {
          a.formats.assign(a.segments.size(), M);  // recorded before upgrading
          a.outcome = Out::ExceedsMhc;
          out.push_back(a);
          continue;
        }
        a.outcome = feasible(state, a, b) ? Out::Accepted : Out::SpectrumBlocked;
        out.push_back(a);
        if (a.outcome == Out::Accepted) return out;
      }
    }
    return out;
  }

 private:
  struct Virt {
    std::uint32_t s, d;
    double cap, used;
  };

  std::size_t fiber(std::size_t link, std::uint32_t from) const {
    return 2 * link + (links_[link].a == from ? 0 : 1);
  }

  bool feasible(const eon::NetworkState& state, const RefAttempt& a, double b) const {
    const auto& sp = state.spectrum();
    std::vector<Bits> grids;
    for (std::size_t f = 0; f < sp.fiber_count(); ++f) grids.push_back(to_bits(sp.grid(f)));
    std::vector<Virt> virt;  // ascending id order
    for (const auto& [id, lp] : state.virtual_topology().active())
      virt.push_back({lp.source().index, lp.destination().index, lp.capacity_gbps, lp.used_gbps});

    for (std::size_t i = 0; i < a.segments.size(); ++i) {
      const auto [u, v] = a.segments[i];
      const eon::Modulation m = a.formats[i];
      std::optional<std::size_t> groom;
      for (std::size_t j = 0; j < virt.size(); ++j) {
        const auto& lp = virt[j];
        if (lp.s != u || lp.d != v || lp.cap - lp.used < b) continue;
        if (!groom || lp.used / lp.cap < virt[*groom].used / virt[*groom].cap) groom = j;
      }
      if (groom) {
        virt[*groom].used += b;
        continue;
      }
      const int data = static_cast<int>(std::ceil(b / (12.5 * eon::bits_of(m))));
      if (data > 32) return false;
      const auto& routes = paths_[u * n_ + v];
      bool placed = false;
      for (std::size_t r = 0; r < std::min(rsa_k_, routes.size()) && !placed; ++r) {
        if (routes[r].cost > eon::format_of(m).reach_km) continue;
        std::vector<std::size_t> fibers;
        for (std::size_t h = 0; h + 1 < routes[r].nodes.size(); ++h)
          fibers.push_back(fiber(routes[r].arcs[h] / 2, routes[r].nodes[h]));
        std::vector<Bits> on_route;
        for (auto f : fibers) on_route.push_back(grids[f]);
        if (auto start = exhaustive_first_fit(on_route, data, 2)) {
          for (auto f : fibers)
            for (int x = *start; x < *start + data + 2; ++x) grids[f][static_cast<std::size_t>(x)] = true;
          virt.push_back({u, v, data * 12.5 * eon::bits_of(m), b});
          placed = true;
        }
      }
      if (!placed) return false;
    }
    return true;
  }

  std::size_t n_;
  std::vector<RefLink> links_;
  std::size_t max_k_, rsa_k_;
  std::vector<std::vector<RefPath>> paths_;
  double diameter_ = 0.0;
};

}  // namespace oracle
