#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eon/config.hpp"

using namespace eon;
using namespace eon::config;

TEST_CASE("an empty config takes every default") {
  auto c = validate_config(parse_config_json("{}"));
  CHECK(c.schemes == std::vector<schemes::SchemeKind>{schemes::SchemeKind::Dmmas});
  CHECK(c.loads == std::vector<double>{100.0});
  CHECK(c.reps == 5);
  CHECK(c.seed == 1);
  CHECK(c.requests == 100000);
  CHECK(c.mean_holding_s == 600.0);
  CHECK(c.network.slots_per_fiber == 320);
  CHECK(c.network.guard_slots == 2);
  CHECK(c.network.max_slots_per_bvt == 32);
  CHECK(c.network.rsa_k == 3);
  CHECK(c.network.max_k == 3);
  CHECK(c.network.formats.descending().size() == 6);
  CHECK(c.scheme_options.amms_mhc == 3);
  CHECK(c.warmup == 0);
  CHECK(c.threads == 1);
}

TEST_CASE("invalid values are reported together") {
  PartialConfig p;
  p.guard = -1;
  p.reps = 1;
  try {
    validate_config(p);
    FAIL("expected a ConfigError");
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    CHECK(what.find("guard") != std::string::npos);
    CHECK(what.find("reps") != std::string::npos);
  }
  CHECK_THROWS_AS(validate_config(parse_config_json(R"({"schemes": ["FOO"]})")), ConfigError);
  CHECK_THROWS_AS(validate_config(parse_config_json(R"({"formats": ["256QAM"]})")), ConfigError);
  CHECK_THROWS_AS(validate_config(parse_config_json(R"({"loads": [0]})")), ConfigError);
  CHECK_THROWS_AS(parse_config_json(R"({"sedd": 3})"), ConfigError);
  CHECK_THROWS_AS(parse_config_json(R"({"reps": "five"})"), ConfigError);
  CHECK_THROWS_AS(parse_config_json("[1, 2]"), ConfigError);
  CHECK_THROWS_AS(parse_config_json("{"), ConfigError);
}

TEST_CASE("partial configs merge field by field") {
  auto file = parse_config_json(R"({"reps": 7, "loads": "100:300:100", "schemes": "all",
                                    "formats": ["qpsk", "64qam"], "topology": "x.json"})");
  PartialConfig flags;
  flags.reps = 3;
  flags.seed = 42;
  auto c = validate_config(merge(file, flags));
  CHECK(c.reps == 3);  // flags win
  CHECK(c.seed == 42);
  CHECK(c.topology == "x.json");
  CHECK(c.loads == std::vector<double>{100, 200, 300});
  CHECK(c.schemes.size() == 5);
  CHECK(c.network.formats.descending() ==
        std::vector<Modulation>{Modulation::QAM64, Modulation::QPSK});
  CHECK(c.requests == 100000);
}

TEST_CASE("load and scheme lists") {
  CHECK(parse_loads("50:500:50").size() == 10);
  CHECK(parse_loads("50:500:50").back() == 500);
  CHECK(parse_loads("50,100") == std::vector<double>{50, 100});
  CHECK(parse_loads("250") == std::vector<double>{250});
  CHECK_THROWS_AS(parse_loads("100:50:10"), ConfigError);
  CHECK_THROWS_AS(parse_loads("a,b"), ConfigError);
  CHECK_THROWS_AS(parse_loads("1:5:0"), ConfigError);
  CHECK(parse_scheme_list("all").size() == 5);
  CHECK(parse_scheme_list("DMMAS,mAdap") == std::vector<std::string>{"DMMAS", "mAdap"});
  auto c = validate_config(parse_config_json(R"({"schemes": ["dmmas", "DMMAS", "eems"]})"));
  CHECK(c.schemes ==
        std::vector<schemes::SchemeKind>{schemes::SchemeKind::Dmmas, schemes::SchemeKind::Eems});
}
