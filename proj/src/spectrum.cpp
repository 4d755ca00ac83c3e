#include "eon/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace eon {

namespace {

constexpr int kWordBits = 64;

// Position of the first bit equal to `value` in [pos, size), or size.
int next_bit(const std::vector<std::uint64_t>& words, int size, int pos, bool value) {
  while (pos < size) {
    const int w = pos / kWordBits;
    const int off = pos % kWordBits;
    std::uint64_t bits = value ? words[w] : ~words[w];
    bits >>= off;
    if (bits != 0) {
      return std::min(size, pos + std::countr_zero(bits));
    }
    pos = (w + 1) * kWordBits;
  }
  return size;
}

template <typename Fn>
void for_each_free_run(const std::vector<std::uint64_t>& words, int size, Fn&& fn) {
  int pos = 0;
  while (pos < size) {
    const int start = next_bit(words, size, pos, false);
    if (start >= size) break;
    const int end = next_bit(words, size, start, true);
    if (!fn(SlotGrid::Run{start, end - start})) return;
    pos = end;
  }
}

std::uint64_t range_mask(int word, int start, int len) {
  const int lo = std::max(start, word * kWordBits) - word * kWordBits;
  const int hi = std::min(start + len, (word + 1) * kWordBits) - word * kWordBits;
  if (hi <= lo) return 0;
  const std::uint64_t upper = hi == kWordBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << hi) - 1);
  return upper & ~((std::uint64_t{1} << lo) - 1);
}

void check_range(const SlotGrid& g, int start, int len) {
  if (start < 0 || len < 0 || start + len > g.size()) {
    throw SpectrumError("slot range outside grid");
  }
}

}  // namespace

SlotGrid::SlotGrid(int slots) : size_(slots), words_((slots + kWordBits - 1) / kWordBits, 0) {
  if (slots <= 0) throw std::invalid_argument("grid must have at least one slot");
}

bool SlotGrid::occupied(int slot) const {
  check_range(*this, slot, 1);
  return (words_[slot / kWordBits] >> (slot % kWordBits)) & 1U;
}

int SlotGrid::occupied_count() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool SlotGrid::range_free(int start, int len) const {
  check_range(*this, start, len);
  for (int w = start / kWordBits; w * kWordBits < start + len; ++w) {
    if (words_[w] & range_mask(w, start, len)) return false;
  }
  return true;
}

bool SlotGrid::range_occupied(int start, int len) const {
  check_range(*this, start, len);
  for (int w = start / kWordBits; w * kWordBits < start + len; ++w) {
    const auto m = range_mask(w, start, len);
    if ((words_[w] & m) != m) return false;
  }
  return true;
}

void SlotGrid::occupy(int start, int len) {
  check_range(*this, start, len);
  for (int w = start / kWordBits; w * kWordBits < start + len; ++w) {
    words_[w] |= range_mask(w, start, len);
  }
}

void SlotGrid::vacate(int start, int len) {
  check_range(*this, start, len);
  for (int w = start / kWordBits; w * kWordBits < start + len; ++w) {
    words_[w] &= ~range_mask(w, start, len);
  }
}

std::vector<SlotGrid::Run> SlotGrid::free_runs() const {
  std::vector<Run> runs;
  for_each_free_run(words_, size_, [&](Run r) {
    runs.push_back(r);
    return true;
  });
  return runs;
}

std::optional<SpectrumBlock> first_fit(std::span<const SlotGrid* const> route, int data_len,
                                       int guard_len) {
  if (route.empty()) throw std::invalid_argument("route must contain at least one fiber");
  if (data_len < 1 || guard_len < 0) throw std::invalid_argument("invalid block size");
  const int size = route.front()->size();
  std::vector<std::uint64_t> merged(route.front()->words().size(), 0);
  for (const SlotGrid* g : route) {
    if (g->size() != size) throw std::invalid_argument("grids on a route differ in size");
    for (std::size_t w = 0; w < merged.size(); ++w) merged[w] |= g->words()[w];
  }
  const int footprint = data_len + guard_len;
  std::optional<SpectrumBlock> found;
  for_each_free_run(merged, size, [&](SlotGrid::Run r) {
    if (r.length >= footprint) {
      found = SpectrumBlock{r.start, data_len, guard_len};
      return false;
    }
    return true;
  });
  return found;
}

void allocate(std::span<SlotGrid* const> route, const SpectrumBlock& block) {
  for (const SlotGrid* g : route) {
    if (!g->range_free(block.start, block.footprint())) {
      throw SpectrumError("spectrum collision: footprint already occupied");
    }
  }
  for (SlotGrid* g : route) g->occupy(block.start, block.footprint());
}

void release(std::span<SlotGrid* const> route, const SpectrumBlock& block) {
  for (const SlotGrid* g : route) {
    if (!g->range_occupied(block.start, block.footprint())) {
      throw SpectrumError("spectrum release of slots that are already free");
    }
  }
  for (SlotGrid* g : route) g->vacate(block.start, block.footprint());
}

double f_ext(const SlotGrid& grid) {
  int total = 0;
  int largest = 0;
  for (const auto& r : grid.free_runs()) {
    total += r.length;
    largest = std::max(largest, r.length);
  }
  if (total == 0) return 0.0;
  return 1.0 - static_cast<double>(largest) / static_cast<double>(total);
}

double block_entropy(std::span<const int> free_blocks, int total_slots) {
  const double d = total_slots;
  double h = 0.0;
  for (int len : free_blocks) {
    const double p = len / d;
    h -= p * std::log(p);
  }
  return h;
}

double f_ent(const SlotGrid& grid) {
  std::vector<int> blocks;
  for (const auto& r : grid.free_runs()) blocks.push_back(r.length);
  return block_entropy(blocks, grid.size());
}

namespace {
// ln(S/2), kept away from zero for grids of fewer than four slots.
double entropy_bound(int slots) { return std::log(std::max(slots / 2.0, 2.0)); }
double clamp_entropy(double x) { return std::clamp(x, kEntropyFloor, 1.0); }
}  // namespace

double normalize_entropy(double entropy, int total_slots) {
  return clamp_entropy(entropy / entropy_bound(total_slots));
}

double f_ent_normalized(const SlotGrid& grid) {
  return normalize_entropy(f_ent(grid), grid.size());
}

double network_f_ext(std::span<const SlotGrid> grids) {
  if (grids.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& g : grids) sum += f_ext(g);
  return sum / static_cast<double>(grids.size());
}

double network_f_ent_raw(std::span<const SlotGrid> grids) {
  double sum = 0.0;
  for (const auto& g : grids) sum += f_ent(g);
  return sum;
}

double network_f_ent_normalized(std::span<const SlotGrid> grids) {
  if (grids.empty()) return kEntropyFloor;
  double sum = 0.0;
  for (const auto& g : grids) sum += f_ent(g) / entropy_bound(g.size());
  return clamp_entropy(sum / static_cast<double>(grids.size()));
}

SpectrumState::SpectrumState(const PhysicalTopology& topo, int slots_per_fiber)
    : slots_(slots_per_fiber),
      grids_(topo.fiber_count(), SlotGrid(slots_per_fiber)),
      cache_(grids_.size()) {
  for (std::size_t i = 0; i < grids_.size(); ++i) dirty_.push_back(i);
}

std::vector<SlotGrid*> SpectrumState::route_grids(const PhysicalPath& route) {
  std::vector<SlotGrid*> out;
  out.reserve(route.fibers.size());
  for (auto f : route.fibers) out.push_back(&grids_.at(f));
  return out;
}

std::optional<SpectrumBlock> SpectrumState::first_fit(const PhysicalPath& route, int data_len,
                                                      int guard_len) const {
  std::vector<const SlotGrid*> gs;
  gs.reserve(route.fibers.size());
  for (auto f : route.fibers) gs.push_back(&grids_.at(f));
  return eon::first_fit(gs, data_len, guard_len);
}

void SpectrumState::allocate(const PhysicalPath& route, const SpectrumBlock& block) {
  auto gs = route_grids(route);
  eon::allocate(gs, block);
  for (auto f : route.fibers) {
    if (!cache_[f].dirty) {
      cache_[f].dirty = true;
      dirty_.push_back(f);
    }
  }
}

void SpectrumState::release(const PhysicalPath& route, const SpectrumBlock& block) {
  auto gs = route_grids(route);
  eon::release(gs, block);
  for (auto f : route.fibers) {
    if (!cache_[f].dirty) {
      cache_[f].dirty = true;
      dirty_.push_back(f);
    }
  }
}

void SpectrumState::refresh() const {
  const double bound = entropy_bound(slots_);
  for (auto f : dirty_) {
    auto& c = cache_[f];
    c.ext = f_ext(grids_[f]);
    c.ent = f_ent(grids_[f]);
    c.ent_norm = c.ent / bound;
    c.dirty = false;
  }
  dirty_.clear();
}

double SpectrumState::network_f_ext() const {
  refresh();
  if (cache_.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& c : cache_) sum += c.ext;
  return sum / static_cast<double>(cache_.size());
}

double SpectrumState::network_f_ent_raw() const {
  refresh();
  double sum = 0.0;
  for (const auto& c : cache_) sum += c.ent;
  return sum;
}

double SpectrumState::network_f_ent_normalized() const {
  refresh();
  if (cache_.empty()) return kEntropyFloor;
  double sum = 0.0;
  for (const auto& c : cache_) sum += c.ent_norm;
  return clamp_entropy(sum / static_cast<double>(cache_.size()));
}

std::string SpectrumState::snapshot(const PhysicalTopology& topo) const {
  std::ostringstream os;
  for (std::size_t f = 0; f < grids_.size(); ++f) {
    auto [from, to] = topo.fiber_endpoints(f);
    os << topo.label(from) << "->" << topo.label(to) << ' ';
    for (int s = 0; s < slots_; ++s) os << (grids_[f].occupied(s) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

}  // namespace eon
