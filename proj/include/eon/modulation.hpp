#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace eon {

// Ordered by bits per symbol; the underlying value is the bit count.
enum class Modulation : int {
  BPSK = 1,
  QPSK = 2,
  QAM8 = 3,
  QAM16 = 4,
  QAM32 = 5,
  QAM64 = 6,
};

struct ModulationFormat {
  Modulation id;
  std::string_view name;
  int bits_per_symbol;
  double subcarrier_gbps;
  double reach_km;
  // Per-subcarrier BVT power as tabulated. Informational only: energy
  // accounting evaluates the linear BVT model instead.
  double table_power_w;
};

inline constexpr std::array<ModulationFormat, 6> kModulationTable{{
    {Modulation::BPSK, "BPSK", 1, 12.5, 8000.0, 112.374},
    {Modulation::QPSK, "QPSK", 2, 25.0, 4000.0, 133.416},
    {Modulation::QAM8, "8QAM", 3, 37.5, 2000.0, 154.457},
    {Modulation::QAM16, "16QAM", 4, 50.0, 1000.0, 175.498},
    {Modulation::QAM32, "32QAM", 5, 62.5, 500.0, 196.539},
    {Modulation::QAM64, "64QAM", 6, 75.0, 250.0, 217.581},
}};

inline constexpr std::array<Modulation, 6> kAllModulations{
    Modulation::BPSK,  Modulation::QPSK,  Modulation::QAM8,
    Modulation::QAM16, Modulation::QAM32, Modulation::QAM64};

constexpr const ModulationFormat& format_of(Modulation m) {
  return kModulationTable[static_cast<std::size_t>(m) - 1];
}
constexpr int bits_of(Modulation m) { return static_cast<int>(m); }
constexpr std::size_t index_of(Modulation m) { return static_cast<std::size_t>(m) - 1; }

std::string_view to_string(Modulation m);
std::optional<Modulation> parse_modulation(std::string_view name);  // case-insensitive

// Data slots (guard band excluded) needed to carry `bitrate_gbps`.
// Throws std::invalid_argument for non-positive bitrates.
int slots_needed(double bitrate_gbps, Modulation m);

bool reach_ok(double distance_km, Modulation m);

std::optional<Modulation> next_lower(Modulation m);
std::optional<Modulation> next_higher(Modulation m);

// The set of formats a run may use, kept sorted from most to least
// spectrally efficient.
class ModulationSet {
 public:
  ModulationSet();  // all six formats
  explicit ModulationSet(std::vector<Modulation> formats);

  const std::vector<Modulation>& descending() const { return formats_; }
  Modulation most_efficient() const { return formats_.front(); }
  Modulation least_efficient() const { return formats_.back(); }
  bool contains(Modulation m) const;
  // Next available format below m, skipping unavailable ones.
  std::optional<Modulation> lower_than(Modulation m) const;

 private:
  std::vector<Modulation> formats_;
};

}  // namespace eon
