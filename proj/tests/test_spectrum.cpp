#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eon/spectrum.hpp"
#include "oracles.hpp"

using namespace eon;

namespace {

SlotGrid grid_from(const std::string& pattern) {  // '1' occupied, '0' free
  SlotGrid g(static_cast<int>(pattern.size()));
  for (int i = 0; i < static_cast<int>(pattern.size()); ++i) {
    if (pattern[static_cast<std::size_t>(i)] == '1') g.occupy(i, 1);
  }
  return g;
}

std::optional<SpectrumBlock> ff(std::initializer_list<const SlotGrid*> gs, int data, int guard) {
  std::vector<const SlotGrid*> v(gs);
  return first_fit(v, data, guard);
}

}  // namespace

TEST_CASE("first fit examples") {
  SlotGrid a(320), b(320);
  auto blk = ff({&a, &b}, 3, 2);
  REQUIRE(blk);
  CHECK(blk->start == 0);
  CHECK(blk->footprint() == 5);

  SlotGrid l1(20), l2(20);
  l1.occupy(10, 10);  // free [0, 10)
  l2.occupy(0, 5);    // free [5, 15)
  l2.occupy(15, 5);
  blk = ff({&l1, &l2}, 3, 2);
  REQUIRE(blk);
  CHECK(blk->start == 5);

  CHECK_FALSE(ff({&l1, &l2}, 4, 2));
  CHECK_THROWS_AS(ff({&a}, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(first_fit(std::vector<const SlotGrid*>{}, 1, 2), std::invalid_argument);
}

TEST_CASE("allocate and release") {
  SlotGrid g1(32), g2(32);
  std::vector<SlotGrid*> route{&g1, &g2};
  SpectrumBlock a{0, 3, 2}, b{5, 2, 2};
  allocate(route, a);
  CHECK(g1.range_occupied(0, 5));
  CHECK(g2.range_occupied(0, 5));
  CHECK_THROWS_AS(allocate(route, a), SpectrumError);
  allocate(route, b);
  release(route, a);
  CHECK(g1.range_free(0, 5));
  CHECK(g1.range_occupied(5, 4));
  CHECK(g1.occupied_count() == 4);
  CHECK_THROWS_AS(release(route, a), SpectrumError);

  // all-or-nothing: a collision on the second grid leaves the first untouched
  g2.occupy(20, 1);
  const SlotGrid before = g1;
  CHECK_THROWS_AS(allocate(route, SpectrumBlock{18, 2, 2}), SpectrumError);
  CHECK(g1 == before);
  CHECK_THROWS_AS(allocate(route, SpectrumBlock{30, 2, 2}), SpectrumError);  // past the end
}

TEST_CASE("external fragmentation") {
  CHECK(f_ext(SlotGrid(320)) == 0.0);
  CHECK(f_ext(grid_from("0000000111000")) == doctest::Approx(0.3));
  CHECK(f_ext(grid_from("1111")) == 0.0);
}

TEST_CASE("entropy fragmentation") {
  CHECK(f_ent(SlotGrid(320)) == 0.0);
  CHECK(f_ent(grid_from("1111")) == 0.0);
  const int fives[] = {5, 5};
  CHECK(block_entropy(fives, 10) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(normalize_entropy(block_entropy(fives, 10), 10) ==
        doctest::Approx(std::log(2.0) / std::log(5.0)).epsilon(1e-12));
  CHECK(normalize_entropy(block_entropy(fives, 10), 10) == doctest::Approx(0.4307).epsilon(1e-4));
  // an achievable grid: blocks {4, 4} in ten slots
  const auto g = grid_from("0000110000");
  CHECK(f_ent(g) == doctest::Approx(-2 * 0.4 * std::log(0.4)).epsilon(1e-12));
}

TEST_CASE("normalized entropy: floor, bound and clamp") {
  CHECK(f_ent_normalized(SlotGrid(320)) == kEntropyFloor);
  CHECK(f_ent_normalized(grid_from("1111")) == kEntropyFloor);
  // ln(S/2) is an upper bound from six slots on; maximal scatter stays below 1
  for (int S = 6; S <= 400; S += (S < 40 ? 1 : 37)) {
    CHECK(oracle::max_entropy(S) <= std::log(S / 2.0));
  }
  const double best320 = oracle::max_entropy(320) / std::log(160.0);
  CHECK(best320 == doctest::Approx(0.6929).epsilon(1e-3));
  // alternating single-slot blocks
  std::string alt;
  for (int i = 0; i < 320; ++i) alt += (i % 2 ? '1' : '0');
  CHECK(f_ent_normalized(grid_from(alt)) ==
        doctest::Approx(0.5 * std::log(320.0) / std::log(160.0)).epsilon(1e-12));
  // tiny grids can exceed the bound and are clamped to exactly 1
  CHECK(f_ent(grid_from("010")) > std::log(2.0));
  CHECK(f_ent_normalized(grid_from("010")) == 1.0);
  CHECK(network_f_ent_normalized(std::vector<SlotGrid>{grid_from("010"), grid_from("010")}) == 1.0);
}

TEST_CASE("network averages") {
  std::vector<SlotGrid> free(4, SlotGrid(64));
  CHECK(network_f_ext(free) == 0.0);
  CHECK(network_f_ent_normalized(free) == kEntropyFloor);
  std::vector<SlotGrid> one{grid_from("0000000111000")};
  CHECK(network_f_ext(one) == f_ext(one[0]));
}

TEST_CASE("first fit, metrics and invariants against exhaustive oracles") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> size(8, 96), hops(1, 4), data(1, 8), guard(0, 3);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int trial = 0; trial < 1500; ++trial) {
    const int S = size(rng);
    const int h = hops(rng);
    const double density = coin(rng);
    std::vector<SlotGrid> gs(static_cast<std::size_t>(h), SlotGrid(S));
    std::vector<oracle::Bits> bits;
    for (auto& g : gs) {
      for (int i = 0; i < S; ++i)
        if (coin(rng) < density * 0.6) g.occupy(i, 1);
      bits.push_back(oracle::to_bits(g));
      CHECK(f_ext(g) == doctest::Approx(oracle::ref_f_ext(bits.back())).epsilon(1e-12));
      CHECK(f_ent(g) == doctest::Approx(oracle::ref_f_ent(bits.back())).epsilon(1e-12));
      CHECK(g.occupied_count() == static_cast<int>(std::count(bits.back().begin(), bits.back().end(), true)));
    }
    std::vector<const SlotGrid*> route;
    for (auto& g : gs) route.push_back(&g);
    const int d = data(rng), gd = guard(rng);
    auto got = first_fit(route, d, gd);
    auto want = oracle::exhaustive_first_fit(bits, d, gd);
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      CHECK(got->start == *want);
      CHECK(got->data_len == d);
      CHECK(got->guard_len == gd);
    }
  }
}

TEST_CASE("randomized allocate/release keeps every footprint continuous") {
  std::mt19937_64 rng(5);
  const int S = 64;
  const int fibers = 6;
  std::vector<SlotGrid> gs(fibers, SlotGrid(S));
  struct Active {
    std::vector<int> route;
    SpectrumBlock block;
  };
  std::vector<Active> active;
  std::uniform_int_distribution<int> pick_fiber(0, fibers - 1), len(1, 3), data(1, 6);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int step = 0; step < 4000; ++step) {
    if (!active.empty() && coin(rng) < 0.45) {
      std::uniform_int_distribution<std::size_t> pick(0, active.size() - 1);
      const auto i = pick(rng);
      std::vector<SlotGrid*> r;
      for (int f : active[i].route) r.push_back(&gs[static_cast<std::size_t>(f)]);
      release(r, active[i].block);
      active.erase(active.begin() + static_cast<long>(i));
    } else {
      std::vector<int> route;
      const int n = len(rng);
      while (static_cast<int>(route.size()) < n) {
        int f = pick_fiber(rng);
        if (std::find(route.begin(), route.end(), f) == route.end()) route.push_back(f);
      }
      std::vector<const SlotGrid*> cr;
      std::vector<SlotGrid*> r;
      for (int f : route) {
        cr.push_back(&gs[static_cast<std::size_t>(f)]);
        r.push_back(&gs[static_cast<std::size_t>(f)]);
      }
      if (auto b = first_fit(cr, data(rng), 2)) {
        allocate(r, *b);
        active.push_back({route, *b});
      }
    }
    // continuity + contiguity + conservation
    std::vector<int> expected(fibers, 0);
    for (const auto& a : active) {
      for (int f : a.route) {
        CHECK(gs[static_cast<std::size_t>(f)].range_occupied(a.block.start, a.block.footprint()));
        expected[static_cast<std::size_t>(f)] += a.block.footprint();
      }
    }
    for (int f = 0; f < fibers; ++f) {
      CHECK(gs[static_cast<std::size_t>(f)].occupied_count() == expected[static_cast<std::size_t>(f)]);
    }
  }
}

TEST_CASE("spectrum state caches agree with direct computation") {
  std::vector<oracle::RefLink> links{{0, 1, 100}, {1, 2, 100}, {0, 2, 150}, {2, 3, 90}};
  auto topo = oracle::make_topology(4, links);
  SpectrumState st(topo, 40);
  CHECK(st.network_f_ent_normalized() == kEntropyFloor);
  std::mt19937_64 rng(9);
  std::vector<std::pair<PhysicalPath, SpectrumBlock>> live;
  std::uniform_int_distribution<std::uint32_t> node(0, 3);
  std::uniform_int_distribution<int> data(1, 4);
  for (int step = 0; step < 500; ++step) {
    if (!live.empty() && step % 3 == 0) {
      st.release(live.front().first, live.front().second);
      live.erase(live.begin());
    } else {
      auto s = node(rng), d = node(rng);
      if (s == d) continue;
      auto path = shortest_path(topo, NodeId{s}, NodeId{d});
      if (auto b = st.first_fit(path, data(rng), 2)) {
        st.allocate(path, *b);
        live.emplace_back(path, *b);
      }
    }
    CHECK(st.network_f_ext() == doctest::Approx(network_f_ext(st.grids())).epsilon(1e-12));
    CHECK(st.network_f_ent_raw() == doctest::Approx(network_f_ent_raw(st.grids())).epsilon(1e-12));
    CHECK(st.network_f_ent_normalized() ==
          doctest::Approx(network_f_ent_normalized(st.grids())).epsilon(1e-12));
  }
  const auto snap = st.snapshot(topo);
  CHECK(std::count(snap.begin(), snap.end(), '\n') == static_cast<long>(topo.fiber_count()));
  CHECK(snap.rfind("n0->n1 ", 0) == 0);
}
