#pragma once

#include <vector>

#include "symknot/diagram/builder.hpp"
#include "symknot/diagram/tangle.hpp"

namespace symknot::diagram {

enum class CrossingType {
  // The strand from lower-left to upper-right passes under.
  UnderRising,
  // The strand from upper-left to lower-right passes under.
  UnderFalling,
};

// Builds planar diagrams as a left-to-right movie of strands stacked top to
// bottom (position 0 is the top). Cups create a pair of strands, caps close a
// pair, crossings swap neighbours. Planarity holds by construction.
class MorseBuilder {
 public:
  MorseBuilder() = default;
  // Starts with `strands` open ends coming in from the left.
  explicit MorseBuilder(int strands);

  int width() const { return static_cast<int>(positions_.size()); }
  const std::vector<int>& positions() const { return positions_; }
  const std::vector<int>& inputs() const { return inputs_; }

  void cup(int i);
  void cap(int i);
  void cross(int i, CrossingType type);

  PlanarDiagram close(Splitting split = Splitting::Reject);
  // Leaves the current strands open on the right as tangle endpoints. Requires
  // no open ends on the left.
  TangleCode to_tangle(int slots);
  DiagramBuilder& builder() { return builder_; }

 private:
  DiagramBuilder builder_;
  std::vector<int> positions_;
  std::vector<int> inputs_;
};

// Closure of a braid word on `strands` strands. Generator +k crosses strands
// k-1 and k positively in the standard picture, -k negatively.
PlanarDiagram braid_closure(int strands, const std::vector<int>& word, Splitting split = Splitting::Reject);

}  // namespace symknot::diagram
