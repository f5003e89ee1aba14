#pragma once

#include <array>
#include <utility>
#include <vector>

namespace symknot::diagram {

// Open diagram in a ball whose boundary meets a vertical axis on its right
// side. Crossings list four labels counterclockwise with the under-strand in
// slots 0 and 2. The loose ends sit on the axis at `endpoints`, top to bottom.
// A strand running straight from one endpoint to another without crossing
// anything is listed in `arcs` by its two endpoint labels.
struct TangleCode {
  std::vector<std::array<int, 4>> crossings;
  std::vector<int> endpoints;
  std::vector<std::pair<int, int>> arcs;
  int slots = 0;

  // Throws on label multiplicity errors or endpoint count != 2*slots + 2.
  void validate() const;
  int crossing_count() const { return static_cast<int>(crossings.size()); }
};

bool operator==(const TangleCode& a, const TangleCode& b);

}  // namespace symknot::diagram
