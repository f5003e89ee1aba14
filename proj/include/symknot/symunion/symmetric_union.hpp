#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symknot/diagram/planar_diagram.hpp"
#include "symknot/diagram/tangle.hpp"

namespace symknot::symunion {

using diagram::PlanarDiagram;
using diagram::TangleCode;

struct SymmetricUnionSpec {
  TangleCode half;
  // One entry per slot; n > 0 inserts |n| negative crossings, n < 0 positive.
  std::vector<int> twists;
  std::string name;

  void validate() const;
};

struct SymmetricUnion {
  PlanarDiagram diagram;
  // Crossing indices of the left half, its reflected copy, and each slot's
  // twist column (top to bottom).
  std::vector<int> left;
  std::vector<int> right;
  std::vector<std::vector<int>> slots;
};

// (D u -D)(n_1, ..., n_k): the half on the left, its reflection across the
// axis on the right, the outermost endpoints joined straight across, and slot
// i filled with a vertical column of |n_i| crossings between endpoints
// b_{2i-1}, b_{2i} and their reflections. An empty slot caps each side, so all
// twists zero gives J # -J.
SymmetricUnion build_symmetric_union_detailed(const SymmetricUnionSpec& spec);
PlanarDiagram build_symmetric_union(const SymmetricUnionSpec& spec);

// Closure of the half: consecutive slot endpoints capped, outermost endpoints
// joined by an arc.
PlanarDiagram partial_knot(const TangleCode& half);

SymmetricUnionSpec mirror_spec(const SymmetricUnionSpec& spec);

nlohmann::json to_json(const SymmetricUnionSpec& spec);
// `twists` may be omitted when `default_twists` supplies them.
SymmetricUnionSpec spec_from_json(const nlohmann::json& j, const std::vector<int>& default_twists = {});
SymmetricUnionSpec read_spec_file(const std::string& path, const std::vector<int>& default_twists = {});

}  // namespace symknot::symunion
