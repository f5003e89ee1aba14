#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "symknot/diagram/planar_diagram.hpp"
#include "symknot/diagram/tangle.hpp"

namespace symknot::diagram {

// Accepts either `PD[X[1,4,2,5],...]` text (whitespace-insensitive, optional
// `Loop[k]` entries for crossingless components, `PD[]` for the unknot) or a
// JSON object `{"crossings": [[1,4,2,5],...], "name": ..., "loops": n}`.
PlanarDiagram parse_pd(std::string_view text, Splitting split = Splitting::Reject);
PlanarDiagram read_pd_file(const std::string& path, Splitting split = Splitting::Reject);

std::string to_pd_text(const PlanarDiagram& d);

nlohmann::json to_json(const PlanarDiagram& d);
PlanarDiagram diagram_from_json(const nlohmann::json& j, Splitting split = Splitting::Reject);

nlohmann::json to_json(const TangleCode& t);
TangleCode tangle_from_json(const nlohmann::json& j);

}  // namespace symknot::diagram
