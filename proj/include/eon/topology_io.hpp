#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "eon/topology.hpp"

namespace eon {

// Topology documents are JSON:
//
//   {
//     "name": "triangle",
//     "nodes": [ {"id": "A", "label": "Alpha"}, {"id": "B"}, {"id": "C"} ],
//     "links": [ {"a": "A", "b": "B", "length_km": 100}, ... ]
//   }
//
// Node ids may be strings or integers and are mapped to dense indices in
// declaration order. Labels default to the id text. Extra keys are ignored.

class TopologyParseError : public TopologyError {
 public:
  using TopologyError::TopologyError;
};

PhysicalTopology parse_topology(std::string_view document);
PhysicalTopology load_topology(const std::filesystem::path& file);

std::string to_json(const PhysicalTopology& topo, std::string_view name = {});

}  // namespace eon
