#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eon/virtual_topology.hpp"
#include "oracles.hpp"

using namespace eon;

namespace {

struct Fixture {
  PhysicalTopology topo = oracle::make_topology(3, {{0, 1, 200}, {1, 2, 300}});
  SpectrumState spectrum{topo, 320};
  VirtualTopology vt{spectrum};
  PhysicalPath r01 = shortest_path(topo, NodeId{0}, NodeId{1});
  PhysicalPath r02 = shortest_path(topo, NodeId{0}, NodeId{2});

  LightpathId make(const PhysicalPath& r, int start, int slots, Modulation m) {
    return vt.establish(r, SpectrumBlock{start, slots, 2}, m, 0.0);
  }
};

}  // namespace

TEST_CASE("capacity follows slots and format") {
  Fixture f;
  auto a = f.make(f.r01, 0, 3, Modulation::QPSK);
  CHECK(f.vt.lightpath(a).capacity_gbps == 75.0);
  auto b = f.make(f.r01, 10, 32, Modulation::QAM64);
  CHECK(f.vt.lightpath(b).capacity_gbps == 2400.0);
  CHECK_THROWS_AS(f.make(f.r01, 50, 33, Modulation::QAM64), CapacityError);
  // 500 km route is beyond 64QAM reach
  CHECK_THROWS_AS(f.make(f.r02, 100, 1, Modulation::QAM64), CapacityError);
  // collision with the first lightpath's footprint
  CHECK_THROWS_AS(f.make(f.r02, 2, 1, Modulation::QAM32), SpectrumError);
  CHECK(f.vt.active_count() == 2);
  CHECK(f.spectrum.grid(f.r01.fibers[0]).occupied_count() == 5 + 34);
}

TEST_CASE("grooming picks the least utilized lightpath") {
  Fixture f;
  CHECK_FALSE(f.vt.groom(NodeId{0}, NodeId{1}, 25));
  auto a = f.make(f.r01, 0, 8, Modulation::BPSK);   // 100 Gb/s
  auto b = f.make(f.r01, 20, 8, Modulation::BPSK);  // 100 Gb/s
  f.vt.add_flow(a, FlowId{1}, 25);
  f.vt.add_flow(a, FlowId{2}, 25);  // 50/100
  f.vt.add_flow(b, FlowId{3}, 10);  // 10/100
  CHECK(f.vt.groom(NodeId{0}, NodeId{1}, 25) == b);
  f.vt.add_flow(b, FlowId{4}, 40);  // 50/100: tie goes to the lower id
  CHECK(f.vt.groom(NodeId{0}, NodeId{1}, 25) == a);
  CHECK_FALSE(f.vt.groom(NodeId{1}, NodeId{0}, 25));  // direction matters
  f.vt.add_flow(a, FlowId{5}, 30);
  f.vt.add_flow(b, FlowId{6}, 30);  // both 80/100, residual 20
  CHECK_FALSE(f.vt.groom(NodeId{0}, NodeId{1}, 25));
  CHECK(f.vt.groom(NodeId{0}, NodeId{1}, 20) == a);
}

TEST_CASE("flows add up and the last removal tears down") {
  Fixture f;
  auto a = f.make(f.r01, 0, 8, Modulation::BPSK);
  f.vt.add_flow(a, FlowId{1}, 25);
  f.vt.add_flow(a, FlowId{2}, 50);
  CHECK(f.vt.lightpath(a).used_gbps == 75.0);
  CHECK_THROWS_AS(f.vt.add_flow(a, FlowId{3}, 50), CapacityError);
  CHECK_THROWS_AS(f.vt.remove_flow(a, FlowId{9}), std::logic_error);
  CHECK_FALSE(f.vt.remove_flow(a, FlowId{1}));
  CHECK(f.vt.lightpath(a).used_gbps == 50.0);
  auto gone = f.vt.remove_flow(a, FlowId{2});
  REQUIRE(gone);
  CHECK(gone->id == a);
  CHECK_FALSE(f.vt.contains(a));
  CHECK(f.spectrum.grid(f.r01.fibers[0]).occupied_count() == 0);
  CHECK_FALSE(f.vt.groom(NodeId{0}, NodeId{1}, 25));
}

TEST_CASE("tear down releases spectrum and ids can be restored") {
  Fixture f;
  const auto before = f.vt.next_id();
  auto a = f.make(f.r02, 0, 4, Modulation::QAM16);
  f.vt.tear_down(a);
  f.vt.restore_next_id(before);
  CHECK(f.vt.next_id() == before);
  for (auto fib : f.r02.fibers) CHECK(f.spectrum.grid(fib).occupied_count() == 0);
  CHECK_THROWS_AS(f.vt.tear_down(a), std::logic_error);
}
