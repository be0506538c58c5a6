#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "json.hpp"

#include "gaugekit/cylinder.hpp"
#include "gaugekit/reduction.hpp"

namespace gaugekit {

using Json = nlohmann::ordered_json;

inline constexpr int kSceneSchemaVersion = 1;

using SceneLoop = std::variant<IclLoop, PhaseLoop, VersorLoop>;

/// Parsed scene document. Maps are keyed by name.
struct Scene {
  std::optional<PrincipalBundle> bundle;
  std::map<std::string, ConnectionForm> connections;
  std::map<std::string, Path> paths;
  std::map<std::string, CylinderSpec> cylinders;
  std::map<std::string, SceneLoop> loops;
  std::optional<double> tolerance;
  std::optional<int> steps;
  std::optional<std::uint64_t> seed;
};

/// Throws SchemaViolation for malformed documents and unresolved names.
Scene parse_scene(const Json& doc);
Scene load_scene(const std::string& file);

Json to_json(const GroupElement& g);
GroupElement group_element_from_json(const Json& j);
Json to_json(const Path& p);
Json to_json(const GlobalSection& s);

}  // namespace gaugekit
