#include "eon/topology_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace eon {

namespace {

using nlohmann::json;

std::string line_context(std::string_view doc, std::size_t byte) {
  byte = std::min(byte, doc.size());
  const auto line = 1 + std::count(doc.begin(), doc.begin() + static_cast<long>(byte), '\n');
  const auto start = doc.rfind('\n', byte == 0 ? 0 : byte - 1);
  const auto line_start = start == std::string_view::npos ? 0 : start + 1;
  auto line_end = doc.find('\n', line_start);
  if (line_end == std::string_view::npos) line_end = doc.size();
  std::ostringstream os;
  os << "line " << line << ": " << doc.substr(line_start, line_end - line_start);
  return os.str();
}

std::string id_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw TopologyParseError(where + ": node id must be a string or integer");
}

}  // namespace

PhysicalTopology parse_topology(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw TopologyParseError("malformed topology document at " +
                             line_context(document, e.byte == 0 ? 0 : e.byte - 1) + " (" +
                             e.what() + ")");
  }
  if (!doc.is_object()) throw TopologyParseError("topology document must be a JSON object");
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw TopologyParseError("missing \"nodes\" array");
  }
  if (!doc.contains("links") || !doc["links"].is_array()) {
    throw TopologyParseError("missing \"links\" array");
  }

  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < doc["nodes"].size(); ++i) {
    const auto& n = doc["nodes"][i];
    const std::string where = "node #" + std::to_string(i);
    if (!n.is_object() || !n.contains("id")) throw TopologyParseError(where + ": missing \"id\"");
    std::string id = id_text(n["id"], where);
    if (!index.emplace(id, labels.size()).second) {
      throw TopologyError(where + ": duplicate node id \"" + id + "\"");
    }
    labels.push_back(n.contains("label") && n["label"].is_string()
                         ? n["label"].get<std::string>()
                         : id);
  }

  std::vector<PhysicalTopology::LinkSpec> links;
  for (std::size_t i = 0; i < doc["links"].size(); ++i) {
    const auto& l = doc["links"][i];
    const std::string where = "link #" + std::to_string(i);
    if (!l.is_object() || !l.contains("a") || !l.contains("b") || !l.contains("length_km")) {
      throw TopologyParseError(where + ": requires \"a\", \"b\" and \"length_km\"");
    }
    auto endpoint = [&](const char* key) {
      std::string id = id_text(l[key], where);
      auto it = index.find(id);
      if (it == index.end()) throw TopologyError(where + ": unknown node \"" + id + "\"");
      return it->second;
    };
    if (!l["length_km"].is_number()) {
      throw TopologyParseError(where + ": length_km must be a number");
    }
    links.push_back({endpoint("a"), endpoint("b"), l["length_km"].get<double>()});
  }
  return PhysicalTopology(std::move(labels), links);
}

PhysicalTopology load_topology(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw TopologyError("cannot open topology file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_topology(buf.str());
}

std::string to_json(const PhysicalTopology& topo, std::string_view name) {
  json doc;
  if (!name.empty()) doc["name"] = std::string(name);
  doc["nodes"] = json::array();
  for (std::size_t i = 0; i < topo.node_count(); ++i) {
    doc["nodes"].push_back({{"id", i}, {"label", topo.label(NodeId{i})}});
  }
  doc["links"] = json::array();
  for (const auto& l : topo.links()) {
    doc["links"].push_back({{"a", l.a.index}, {"b", l.b.index}, {"length_km", l.length_km}});
  }
  return doc.dump(2);
}

}  // namespace eon
