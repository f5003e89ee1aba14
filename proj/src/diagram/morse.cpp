#include "symknot/diagram/morse.hpp"

#include <cstdlib>
#include <string>

#include "symknot/error.hpp"

namespace symknot::diagram {

MorseBuilder::MorseBuilder(int strands) {
  for (int i = 0; i < strands; ++i) {
    positions_.push_back(builder_.new_label());
    inputs_.push_back(positions_.back());
  }
}

void MorseBuilder::cup(int i) {
  if (i < 0 || i > width()) throw Error(ErrorKind::InvalidArgument, "cup position out of range");
  int l = builder_.new_label();
  positions_.insert(positions_.begin() + i, {l, l});
}

void MorseBuilder::cap(int i) {
  if (i < 0 || i + 1 >= width()) throw Error(ErrorKind::InvalidArgument, "cap position out of range");
  builder_.join(positions_[i], positions_[i + 1]);
  positions_.erase(positions_.begin() + i, positions_.begin() + i + 2);
}

void MorseBuilder::cross(int i, CrossingType type) {
  if (i < 0 || i + 1 >= width()) throw Error(ErrorKind::InvalidArgument, "crossing position out of range");
  const int nw = positions_[i];
  const int sw = positions_[i + 1];
  const int ne = builder_.new_label();
  const int se = builder_.new_label();
  if (type == CrossingType::UnderRising) {
    builder_.add_crossing({sw, se, ne, nw});
  } else {
    builder_.add_crossing({se, ne, nw, sw});
  }
  positions_[i] = ne;
  positions_[i + 1] = se;
}

PlanarDiagram MorseBuilder::close(Splitting split) {
  if (!inputs_.empty() || !positions_.empty()) {
    throw Error(ErrorKind::Precondition, "closing a movie with loose strands");
  }
  return builder_.build(split);
}

TangleCode MorseBuilder::to_tangle(int slots) {
  if (!inputs_.empty()) throw Error(ErrorKind::Precondition, "tangle movie must start empty");
  return builder_.build_tangle(positions_, slots);
}

PlanarDiagram braid_closure(int strands, const std::vector<int>& word, Splitting split) {
  if (strands < 1) throw Error(ErrorKind::InvalidArgument, "braid needs a strand");
  MorseBuilder m;
  for (int i = 0; i < strands; ++i) m.cup(i);
  for (int g : word) {
    int k = std::abs(g);
    if (k < 1 || k >= strands) {
      throw Error(ErrorKind::InvalidArgument, "braid generator " + std::to_string(g) + " out of range");
    }
    // Both strands run left to right; rising-under gives a positive crossing.
    m.cross(k - 1, g > 0 ? CrossingType::UnderRising : CrossingType::UnderFalling);
    // Keep every component running left to right through the braid.
    m.builder().prefer_incoming(m.builder().crossing_count() - 1, g > 0 ? 0 : 3);
  }
  for (int i = strands - 1; i >= 0; --i) m.cap(i);
  return m.close(split);
}

}  // namespace symknot::diagram
