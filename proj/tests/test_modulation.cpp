#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eon/modulation.hpp"

using namespace eon;

TEST_CASE("table matches the published values") {
  const double reach[] = {8000, 4000, 2000, 1000, 500, 250};
  const double power[] = {112.374, 133.416, 154.457, 175.498, 196.539, 217.581};
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& f = kModulationTable[i];
    CHECK(f.bits_per_symbol == static_cast<int>(i) + 1);
    CHECK(f.subcarrier_gbps == 12.5 * f.bits_per_symbol);
    CHECK(f.reach_km == reach[i]);
    CHECK(f.table_power_w == power[i]);
    if (i + 1 < 6) CHECK(f.reach_km == 2 * kModulationTable[i + 1].reach_km);
  }
}

TEST_CASE("slots for the worked examples") {
  CHECK(slots_needed(50, Modulation::BPSK) == 4);
  CHECK(slots_needed(50, Modulation::QPSK) == 2);
  CHECK(slots_needed(75, Modulation::QPSK) == 3);
  CHECK(slots_needed(75, Modulation::BPSK) == 6);
  CHECK(slots_needed(400, Modulation::BPSK) == 32);
  CHECK(slots_needed(1, Modulation::QAM64) == 1);
  CHECK_THROWS_AS(slots_needed(0, Modulation::BPSK), std::invalid_argument);
  CHECK_THROWS_AS(slots_needed(-3, Modulation::BPSK), std::invalid_argument);
}

TEST_CASE("slot counts cover the demand and shrink with efficiency") {
  for (double b = 0.5; b <= 800; b += 0.5) {
    int prev = 1 << 30;
    for (Modulation m : kAllModulations) {
      const int n = slots_needed(b, m);
      CHECK(n * format_of(m).subcarrier_gbps >= b);
      CHECK((n - 1) * format_of(m).subcarrier_gbps < b);
      CHECK(n <= prev);
      prev = n;
    }
  }
}

TEST_CASE("reach boundaries") {
  CHECK(reach_ok(8000, Modulation::BPSK));
  CHECK_FALSE(reach_ok(8001, Modulation::BPSK));
  CHECK(reach_ok(250, Modulation::QAM64));
  CHECK_FALSE(reach_ok(251, Modulation::QAM64));
}

TEST_CASE("format stepping and names") {
  CHECK(next_lower(Modulation::QPSK) == Modulation::BPSK);
  CHECK_FALSE(next_lower(Modulation::BPSK));
  CHECK(next_lower(Modulation::QAM64) == Modulation::QAM32);
  CHECK(next_higher(Modulation::QAM32) == Modulation::QAM64);
  CHECK_FALSE(next_higher(Modulation::QAM64));
  for (Modulation m : kAllModulations) CHECK(parse_modulation(to_string(m)) == m);
  CHECK(parse_modulation("16qam") == Modulation::QAM16);
  CHECK_FALSE(parse_modulation("256QAM"));
}

TEST_CASE("modulation sets stay sorted and skip missing formats") {
  ModulationSet all;
  CHECK(all.descending().size() == 6);
  CHECK(all.most_efficient() == Modulation::QAM64);
  CHECK(all.least_efficient() == Modulation::BPSK);

  ModulationSet some({Modulation::QPSK, Modulation::QAM64, Modulation::QAM16, Modulation::QPSK});
  CHECK(some.descending() ==
        std::vector<Modulation>{Modulation::QAM64, Modulation::QAM16, Modulation::QPSK});
  CHECK(some.lower_than(Modulation::QAM64) == Modulation::QAM16);
  CHECK(some.lower_than(Modulation::QAM32) == Modulation::QAM16);
  CHECK_FALSE(some.lower_than(Modulation::QPSK));
  CHECK_FALSE(some.contains(Modulation::BPSK));
  CHECK_THROWS_AS(ModulationSet(std::vector<Modulation>{}), std::invalid_argument);
}
