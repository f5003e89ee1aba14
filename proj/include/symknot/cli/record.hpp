#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "symknot/diagram/planar_diagram.hpp"

namespace symknot::cli {

// Everything computed for one diagram, keyed by its canonical PD text.
struct InvariantRecord {
  std::string key;
  std::string name;
  std::string pd;
  int crossings = 0;
  int components = 1;
  std::string jones;
  // Knots only.
  std::optional<std::string> alexander;
  std::optional<std::string> determinant;
  std::optional<int> s;
  nlohmann::json kh = nlohmann::json::object();
  std::string created;

  nlohmann::json to_json() const;
  static InvariantRecord from_json(const nlohmann::json& j);
};

InvariantRecord compute_record(const diagram::PlanarDiagram& d, const std::string& name, int max_crossings);

// UTC, ISO 8601 to the second.
std::string utc_timestamp();

}  // namespace symknot::cli
