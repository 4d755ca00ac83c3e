#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eon/topology.hpp"

namespace eon {

class SpectrumError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Occupancy bitmap of one directed fiber. Bit set = slot occupied.
class SlotGrid {
 public:
  explicit SlotGrid(int slots = 320);

  int size() const { return size_; }
  bool occupied(int slot) const;
  int occupied_count() const;
  int free_count() const { return size_ - occupied_count(); }

  bool range_free(int start, int len) const;
  bool range_occupied(int start, int len) const;
  void occupy(int start, int len);
  void vacate(int start, int len);

  struct Run {
    int start;
    int length;
  };
  std::vector<Run> free_runs() const;

  const std::vector<std::uint64_t>& words() const { return words_; }
  friend bool operator==(const SlotGrid&, const SlotGrid&) = default;

 private:
  int size_;
  std::vector<std::uint64_t> words_;
};

struct SpectrumBlock {
  int start = 0;
  int data_len = 0;
  int guard_len = 0;

  // Data slots followed by the guard band on their upper side.
  int footprint() const { return data_len + guard_len; }
  int end() const { return start + footprint(); }
  friend bool operator==(const SpectrumBlock&, const SpectrumBlock&) = default;
};

// Lowest start whose footprint is free on every grid, or nullopt.
std::optional<SpectrumBlock> first_fit(std::span<const SlotGrid* const> route, int data_len,
                                       int guard_len);

// All-or-nothing; throws SpectrumError on any collision / already-free slot
// and leaves every grid untouched in that case.
void allocate(std::span<SlotGrid* const> route, const SpectrumBlock& block);
void release(std::span<SlotGrid* const> route, const SpectrumBlock& block);

// External fragmentation: 1 - largest free run / total free slots. 0 for a
// grid that is entirely free or entirely occupied.
double f_ext(const SlotGrid& grid);

// Entropy fragmentation over free runs, with probabilities relative to the
// grid size (not the free-slot count).
double f_ent(const SlotGrid& grid);
// The same entropy from free-block sizes and the total slot count D.
double block_entropy(std::span<const int> free_blocks, int total_slots);
// Entropy divided by ln(S/2), the normalizer used by f_ent_normalized.
double normalize_entropy(double entropy, int total_slots);

// f_ent / ln(S/2), clamped to [kEntropyFloor, 1]. From six slots up, ln(S/2)
// exceeds every attainable entropy (a 320-slot grid tops out near 0.69);
// only grids of three to five slots can reach the clamp.
double f_ent_normalized(const SlotGrid& grid);
inline constexpr double kEntropyFloor = 1e-6;

double network_f_ext(std::span<const SlotGrid> grids);
double network_f_ent_raw(std::span<const SlotGrid> grids);
double network_f_ent_normalized(std::span<const SlotGrid> grids);

// Every directed fiber grid of one topology, with fragmentation metrics
// cached per fiber and refreshed only for fibers that changed.
class SpectrumState {
 public:
  SpectrumState(const PhysicalTopology& topo, int slots_per_fiber);

  int slots_per_fiber() const { return slots_; }
  std::size_t fiber_count() const { return grids_.size(); }
  const SlotGrid& grid(std::size_t fiber) const { return grids_.at(fiber); }
  std::span<const SlotGrid> grids() const { return grids_; }

  std::optional<SpectrumBlock> first_fit(const PhysicalPath& route, int data_len,
                                         int guard_len) const;
  void allocate(const PhysicalPath& route, const SpectrumBlock& block);
  void release(const PhysicalPath& route, const SpectrumBlock& block);

  double network_f_ext() const;
  double network_f_ent_raw() const;
  double network_f_ent_normalized() const;

  // One line per fiber: "<from>-><to> <bitmap>" with '1' for occupied.
  std::string snapshot(const PhysicalTopology& topo) const;

  friend bool operator==(const SpectrumState& a, const SpectrumState& b) {
    return a.grids_ == b.grids_;
  }

 private:
  struct Cached {
    double ext = 0.0;
    double ent = 0.0;
    double ent_norm = kEntropyFloor;
    bool dirty = true;
  };
  void refresh() const;
  std::vector<SlotGrid*> route_grids(const PhysicalPath& route);

  int slots_;
  std::vector<SlotGrid> grids_;
  mutable std::vector<Cached> cache_;
  mutable std::vector<std::size_t> dirty_;
};

}  // namespace eon
