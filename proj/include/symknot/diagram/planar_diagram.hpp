#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace symknot::diagram {

// Four arc labels listed counterclockwise, starting from the incoming
// under-strand. The under-strand runs slot 0 -> slot 2; the over-strand joins
// slots 1 and 3 in a direction recovered from the global orientation.
//
//            c
//            ^
//      d ----|---> b      positive: over-strand runs d -> b
//            |
//            a
//
// With the over-strand running b -> d instead, the crossing is negative.
using Crossing = std::array<int, 4>;

enum class Splitting { Reject, Allow };

struct CrossingCounts {
  int components = 0;
  int writhe = 0;
  int positive = 0;
  int negative = 0;
};

class PlanarDiagram {
 public:
  // Validates label multiplicity, orientation and connectivity. Free loops are
  // crossingless unknotted components; a diagram with no crossings and one free
  // loop is the round unknot.
  explicit PlanarDiagram(std::vector<Crossing> crossings, int free_loops = 0,
                         Splitting split = Splitting::Reject);

  static PlanarDiagram unknot() { return PlanarDiagram({}, 1); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int free_loops() const { return free_loops_; }
  bool is_split() const { return split_; }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // +1 or -1.
  int sign(int crossing) const { return signs_[crossing]; }
  const std::vector<int>& signs() const { return signs_; }
  // Slot (1 or 3) where the over-strand enters the crossing.
  int over_incoming_slot(int crossing) const { return signs_[crossing] > 0 ? 3 : 1; }
  bool is_incoming(int crossing, int slot) const;

  CrossingCounts counts() const;
  int components() const;
  // Arc labels in increasing order.
  std::vector<int> arcs() const;
  bool has_arc(int label) const;

  // Arcs of each component that meets a crossing, in walk order.
  std::vector<std::vector<int>> component_arcs() const;
  // Crossing and slot where an arc ends (its head) and starts (its tail).
  std::pair<int, int> head(int label) const;
  std::pair<int, int> tail(int label) const;

 private:
  void validate(Splitting split);

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  bool split_ = false;
  std::string name_;
  std::vector<int> signs_;
};

bool operator==(const PlanarDiagram& a, const PlanarDiagram& b);
inline bool operator!=(const PlanarDiagram& a, const PlanarDiagram& b) { return !(a == b); }

CrossingCounts components_and_writhe(const PlanarDiagram& d);

PlanarDiagram mirror(const PlanarDiagram& d);

// Cuts arc a1 of d1 and arc a2 of d2 and reconnects them. Labels of d2 are
// shifted past those of d1.
PlanarDiagram connected_sum(const PlanarDiagram& d1, int a1, const PlanarDiagram& d2, int a2);

// Replaces one crossing by its 0-smoothing (pairs a-b, c-d) or 1-smoothing
// (pairs a-d, b-c). Components keep their orientation where the smoothing
// allows; the result may be split.
PlanarDiagram resolve(const PlanarDiagram& d, int crossing, int smoothing);

// Same diagram with arcs relabeled 1..n along a walk that starts from the
// given arc. Used for canonical keys and tidy output.
PlanarDiagram relabel_from(const PlanarDiagram& d, int start_arc);

// Relabeling-invariant key: the lexicographically least PD text over all
// starting arcs of the walk.
std::string canonical_key(const PlanarDiagram& d);

}  // namespace symknot::diagram
