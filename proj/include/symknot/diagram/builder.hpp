#pragma once

#include <array>
#include <vector>

#include "symknot/diagram/planar_diagram.hpp"

namespace symknot::diagram {

struct TangleCode;

// Assembles a diagram from unoriented crossings and label identifications.
// Each crossing lists four labels counterclockwise with the under-strand in
// slots 0 and 2. Labels are joined to glue strands together; after all joins,
// every label class must meet crossings exactly twice (or never, in which case
// it closes up into a free loop). Orientation is assigned by walking the
// strands, honouring incoming-slot hints where given.
class DiagramBuilder {
 public:
  int new_label();
  int add_crossing(const std::array<int, 4>& ccw);
  void join(int a, int b);
  // Exchange over and under at a crossing.
  void flip(int crossing);
  // Ask for the strand through this slot to enter the crossing here.
  void prefer_incoming(int crossing, int slot);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  const std::array<int, 4>& crossing(int i) const { return crossings_[i]; }

  // Fixes the orientation of every closed strand. Valid until the next join.
  void orient();
  // Sign of a crossing under the current orientation; requires orient().
  int sign(int crossing) const;

  PlanarDiagram build(Splitting split = Splitting::Reject);
  // Open diagram whose loose ends are the given labels, in order.
  TangleCode build_tangle(const std::vector<int>& endpoints, int slots);

 private:
  int find(int x);
  int free_loop_count();

  std::vector<int> parent_;
  std::vector<std::array<int, 4>> crossings_;
  std::vector<std::array<char, 4>> incoming_;
  std::vector<std::array<char, 4>> hint_;
  bool oriented_ = false;
};

}  // namespace symknot::diagram
