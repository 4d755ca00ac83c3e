#include "eon/modulation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace eon {

std::string_view to_string(Modulation m) { return format_of(m).name; }

std::optional<Modulation> parse_modulation(std::string_view name) {
  auto same = [](std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
             return std::tolower(static_cast<unsigned char>(x)) ==
                    std::tolower(static_cast<unsigned char>(y));
           });
  };
  for (const auto& f : kModulationTable) {
    if (same(f.name, name)) return f.id;
  }
  return std::nullopt;
}

int slots_needed(double bitrate_gbps, Modulation m) {
  if (!(bitrate_gbps > 0.0)) throw std::invalid_argument("bitrate must be positive");
  // Table capacities are multiples of 12.5 and exactly representable, so
  // exact multiples divide to integers without rounding noise.
  const double ratio = bitrate_gbps / format_of(m).subcarrier_gbps;
  return std::max(1, static_cast<int>(std::ceil(ratio)));
}

bool reach_ok(double distance_km, Modulation m) { return distance_km <= format_of(m).reach_km; }

std::optional<Modulation> next_lower(Modulation m) {
  if (m == Modulation::BPSK) return std::nullopt;
  return static_cast<Modulation>(bits_of(m) - 1);
}

std::optional<Modulation> next_higher(Modulation m) {
  if (m == Modulation::QAM64) return std::nullopt;
  return static_cast<Modulation>(bits_of(m) + 1);
}

ModulationSet::ModulationSet() : ModulationSet({kAllModulations.begin(), kAllModulations.end()}) {}

ModulationSet::ModulationSet(std::vector<Modulation> formats) : formats_(std::move(formats)) {
  if (formats_.empty()) throw std::invalid_argument("modulation set must not be empty");
  std::sort(formats_.begin(), formats_.end(),
            [](Modulation a, Modulation b) { return bits_of(a) > bits_of(b); });
  formats_.erase(std::unique(formats_.begin(), formats_.end()), formats_.end());
}

bool ModulationSet::contains(Modulation m) const {
  return std::find(formats_.begin(), formats_.end(), m) != formats_.end();
}

std::optional<Modulation> ModulationSet::lower_than(Modulation m) const {
  for (Modulation f : formats_) {
    if (bits_of(f) < bits_of(m)) return f;
  }
  return std::nullopt;
}

}  // namespace eon
