#include "eon/schemes.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "eon/rsa.hpp"

namespace eon::schemes {

std::optional<SubPathSet> omega(const NetworkModel& model, NodeId s, NodeId d, std::size_t k,
                                Modulation M) {
  if (k < 1 || k > model.params().max_k) throw std::invalid_argument("k outside [1, max_k]");
  const auto& ranked = model.modulation_paths(M, s, d);
  if (k > ranked.size()) return std::nullopt;
  const auto& mt = model.modulation_topology(M);
  const GraphPath& path = ranked[k - 1];
  SubPathSet out;
  out.reserve(path.arcs.size());
  for (std::size_t a : path.arcs) {
    const auto& edge = mt.edges()[mt.graph().arc(a).tag];
    out.push_back(SubPath{edge.from, edge.to, &edge.path, M});
  }
  return out;
}

int compute_mhc(double diameter_km, double f_ent_normalized, double best_reach_km) {
  const double bound = std::ceil(diameter_km * f_ent_normalized / best_reach_km);
  return std::max(1, static_cast<int>(bound));
}

int compute_mhc(const NetworkState& state) {
  const auto& model = state.model();
  return compute_mhc(model.diameter_km(), state.spectrum().network_f_ent_normalized(),
                     format_of(model.params().formats.most_efficient()).reach_km);
}

SubPathSet spec_eff(SubPathSet segments, Modulation M, const ModulationSet& formats) {
  for (auto& seg : segments) {
    std::optional<Modulation> m = formats.most_efficient();
    while (m && bits_of(*m) > bits_of(M) && !reach_ok(seg.path->total_km, *m)) {
      m = formats.lower_than(*m);
    }
    seg.modulation = (m && bits_of(*m) > bits_of(M)) ? *m : M;
  }
  return segments;
}

std::string_view to_string(AttemptOutcome o) {
  switch (o) {
    case AttemptOutcome::NoPath: return "no_path";
    case AttemptOutcome::ExceedsMhc: return "exceeds_mhc";
    case AttemptOutcome::SpectrumBlocked: return "spectrum_blocked";
    case AttemptOutcome::Accepted: return "accepted";
  }
  return "?";
}

std::string DecisionTrace::to_json() const {
  nlohmann::json j;
  j["scheme"] = scheme;
  j["flow"] = request.flow.value;
  j["source"] = request.source.index;
  j["destination"] = request.destination.index;
  j["bitrate_gbps"] = request.bitrate_gbps;
  j["mhc"] = mhc ? nlohmann::json(*mhc) : nlohmann::json(nullptr);
  j["accepted"] = accepted;
  j["attempts"] = nlohmann::json::array();
  for (const auto& a : attempts) {
    nlohmann::json ja;
    ja["M"] = std::string(eon::to_string(a.modulation));
    ja["k"] = a.k;
    ja["outcome"] = std::string(to_string(a.outcome));
    ja["segments"] = nlohmann::json::array();
    for (std::size_t i = 0; i < a.segments.size(); ++i) {
      ja["segments"].push_back({{"from", a.segments[i].first.index},
                                {"to", a.segments[i].second.index},
                                {"m", std::string(eon::to_string(a.segment_modulations[i]))}});
    }
    j["attempts"].push_back(std::move(ja));
  }
  return j.dump();
}

std::string_view to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::MAdap: return "mAdap";
    case SchemeKind::Amms: return "AMMS";
    case SchemeKind::Eems: return "EEMS";
    case SchemeKind::Dmmas: return "DMMAS";
    case SchemeKind::DmmasWoMhc: return "DMMASwoMHC";
  }
  return "?";
}

std::optional<SchemeKind> parse_scheme(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  const std::string want = lower(name);
  for (SchemeKind k : kAllSchemes) {
    if (lower(to_string(k)) == want) return k;
  }
  return std::nullopt;
}

std::unique_ptr<Scheme> make_scheme(SchemeKind kind, const SchemeOptions& options) {
  using HL = MultiHopScheme::HopLimit;
  switch (kind) {
    case SchemeKind::MAdap: return std::make_unique<MAdapScheme>();
    case SchemeKind::Eems: return std::make_unique<EemsScheme>();
    case SchemeKind::Amms:
      if (options.amms_mhc < 1) throw std::invalid_argument("AMMS hop constant must be >= 1");
      return std::make_unique<MultiHopScheme>("AMMS", HL::Static, options.amms_mhc, false);
    case SchemeKind::Dmmas:
      return std::make_unique<MultiHopScheme>("DMMAS", HL::Dynamic, 0, true);
    case SchemeKind::DmmasWoMhc:
      return std::make_unique<MultiHopScheme>("DMMASwoMHC", HL::None, 0, true);
  }
  throw std::invalid_argument("unknown scheme");
}

namespace {

void begin_trace(DecisionTrace* trace, std::string_view name, const Request& r) {
  if (!trace) return;
  *trace = DecisionTrace{};
  trace->scheme = std::string(name);
  trace->request = r;
}

void record(DecisionTrace* trace, Modulation M, std::size_t k, AttemptOutcome outcome,
            const SubPathSet* segments = nullptr) {
  if (!trace) return;
  Attempt a{M, k, outcome, {}, {}};
  if (segments) {
    for (const auto& s : *segments) {
      a.segments.emplace_back(s.from, s.to);
      a.segment_modulations.push_back(s.modulation);
    }
  }
  trace->attempts.push_back(std::move(a));
  if (outcome == AttemptOutcome::Accepted) trace->accepted = true;
}

void validate(const Request& r, const NetworkState& state) {
  const auto n = state.model().topology().node_count();
  if (r.source == r.destination) throw std::invalid_argument("request endpoints must differ");
  if (r.source.index >= n || r.destination.index >= n) {
    throw std::invalid_argument("request endpoint outside topology");
  }
  if (!(r.bitrate_gbps > 0.0)) throw std::invalid_argument("request bitrate must be positive");
}

Decision accept(rsa::Reservation& res, std::vector<Modulation> mods) {
  Decision d;
  d.accepted = true;
  d.chain = res.chain();
  d.segment_modulations = std::move(mods);
  d.created = res.created();
  res.commit();
  return d;
}

Modulation plan_modulation(const rsa::SegmentPlan& plan, const NetworkState& state) {
  if (const auto* g = std::get_if<rsa::GroomPlan>(&plan)) {
    return state.virtual_topology().lightpath(g->lightpath).modulation;
  }
  return std::get<rsa::NewLightpathPlan>(plan).modulation;
}

}  // namespace

MultiHopScheme::MultiHopScheme(std::string name, HopLimit limit, int static_mhc,
                               bool per_segment_formats)
    : name_(std::move(name)),
      limit_(limit),
      static_mhc_(static_mhc),
      per_segment_formats_(per_segment_formats) {}

Decision MultiHopScheme::serve(const Request& r, NetworkState& state,
                               DecisionTrace* trace) const {
  validate(r, state);
  begin_trace(trace, name_, r);
  const auto& model = state.model();
  const auto& params = model.params();

  std::optional<int> mhc;
  if (limit_ == HopLimit::Dynamic) mhc = compute_mhc(state);
  if (limit_ == HopLimit::Static) mhc = static_mhc_;
  if (trace) trace->mhc = mhc;

  for (Modulation M : params.formats.descending()) {
    for (std::size_t k = 1; k <= params.max_k; ++k) {
      auto P = omega(model, r.source, r.destination, k, M);
      if (!P) {
        record(trace, M, k, AttemptOutcome::NoPath);
        continue;
      }
      if (mhc && P->size() > static_cast<std::size_t>(*mhc)) {
        record(trace, M, k, AttemptOutcome::ExceedsMhc, &*P);
        continue;
      }
      if (per_segment_formats_) P = spec_eff(std::move(*P), M, params.formats);

      rsa::Reservation res(state, r.flow, r.bitrate_gbps);
      std::vector<Modulation> used;
      bool ok = true;
      for (const auto& seg : *P) {
        auto plan = rsa::serve_segment(state, seg.from, seg.to, r.bitrate_gbps, seg.modulation,
                                       params.rsa_k);
        if (!plan) {
          ok = false;
          break;
        }
        used.push_back(plan_modulation(*plan, state));
        res.apply(*plan);
      }
      if (!ok) {
        res.rollback();
        record(trace, M, k, AttemptOutcome::SpectrumBlocked, &*P);
        continue;
      }
      record(trace, M, k, AttemptOutcome::Accepted, &*P);
      return accept(res, std::move(used));
    }
  }
  return Decision{};
}

Decision MAdapScheme::serve(const Request& r, NetworkState& state, DecisionTrace* trace) const {
  validate(r, state);
  begin_trace(trace, name(), r);
  const auto& params = state.model().params();
  for (Modulation M : params.formats.descending()) {
    auto plan = rsa::serve_segment(state, r.source, r.destination, r.bitrate_gbps, M,
                                   params.rsa_k);
    SubPathSet seg{SubPath{r.source, r.destination, nullptr, M}};
    if (!plan) {
      record(trace, M, 1, AttemptOutcome::SpectrumBlocked, &seg);
      continue;
    }
    record(trace, M, 1, AttemptOutcome::Accepted, &seg);
    rsa::Reservation res(state, r.flow, r.bitrate_gbps);
    const Modulation used = plan_modulation(*plan, state);
    res.apply(*plan);
    return accept(res, {used});
  }
  return Decision{};
}

Decision EemsScheme::serve(const Request& r, NetworkState& state, DecisionTrace* trace) const {
  validate(r, state);
  begin_trace(trace, name(), r);
  const auto& params = state.model().params();
  for (Modulation M : params.formats.descending()) {
    auto plan = rsa::serve_segment(state, r.source, r.destination, r.bitrate_gbps, M,
                                   params.rsa_k);
    if (!plan) {
      SubPathSet seg{SubPath{r.source, r.destination, nullptr, M}};
      record(trace, M, 1, AttemptOutcome::SpectrumBlocked, &seg);
      continue;
    }
    if (auto* fresh = std::get_if<rsa::NewLightpathPlan>(&*plan)) {
      // Same route and slot count, least efficient format that still fits.
      const int slots = fresh->block.data_len;
      const auto& formats = params.formats.descending();
      for (auto it = formats.rbegin(); it != formats.rend(); ++it) {
        if (bits_of(*it) >= bits_of(M)) break;
        if (reach_ok(fresh->route->total_km, *it) && slots_needed(r.bitrate_gbps, *it) == slots) {
          fresh->modulation = *it;
          break;
        }
      }
    }
    const Modulation used = plan_modulation(*plan, state);
    SubPathSet seg{SubPath{r.source, r.destination, nullptr, used}};
    record(trace, M, 1, AttemptOutcome::Accepted, &seg);
    rsa::Reservation res(state, r.flow, r.bitrate_gbps);
    res.apply(*plan);
    return accept(res, {used});
  }
  return Decision{};
}

}  // namespace eon::schemes
