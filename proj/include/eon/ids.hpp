#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace eon {

struct LightpathId {
  std::uint64_t value = 0;
  friend constexpr auto operator<=>(LightpathId, LightpathId) = default;
};

struct FlowId {
  std::uint64_t value = 0;
  friend constexpr auto operator<=>(FlowId, FlowId) = default;
};

}  // namespace eon

template <>
struct std::hash<eon::LightpathId> {
  std::size_t operator()(eon::LightpathId id) const noexcept {
    return std::hash<std::uint64_t>{}(id.value);
  }
};

template <>
struct std::hash<eon::FlowId> {
  std::size_t operator()(eon::FlowId id) const noexcept {
    return std::hash<std::uint64_t>{}(id.value);
  }
};
