#include "symknot/diagram/tangle.hpp"

#include <map>
#include <set>
#include <string>

#include "symknot/error.hpp"

namespace symknot::diagram {

void TangleCode::validate() const {
  if (slots < 0) throw Error(ErrorKind::InvalidArgument, "negative slot count");
  if (static_cast<int>(endpoints.size()) != 2 * slots + 2) {
    throw Error(ErrorKind::InvalidArgument, "tangle with " + std::to_string(slots) + " slots needs " +
                                                std::to_string(2 * slots + 2) + " endpoints, got " +
                                                std::to_string(endpoints.size()));
  }
  std::map<int, int> uses;
  for (const auto& x : crossings) {
    for (int l : x) {
      if (l <= 0) throw Error(ErrorKind::MalformedSyntax, "tangle labels must be positive");
      ++uses[l];
    }
  }
  std::set<int> ends(endpoints.begin(), endpoints.end());
  if (ends.size() != endpoints.size()) throw Error(ErrorKind::ArcMultiplicity, "repeated tangle endpoint");
  std::set<int> in_arc;
  for (auto [a, b] : arcs) {
    if (!ends.count(a) || !ends.count(b) || a == b) {
      throw Error(ErrorKind::InvalidArgument, "tangle arc must join two distinct endpoints");
    }
    if (!in_arc.insert(a).second || !in_arc.insert(b).second) {
      throw Error(ErrorKind::ArcMultiplicity, "endpoint used by two arcs");
    }
  }
  for (int e : endpoints) {
    int want = in_arc.count(e) ? 0 : 1;
    if (uses[e] != want) {
      throw Error(ErrorKind::ArcMultiplicity, "endpoint " + std::to_string(e) + " occurs " +
                                                  std::to_string(uses[e]) + " times in crossings");
    }
  }
  for (const auto& [l, count] : uses) {
    if (!ends.count(l) && count != 2) {
      throw Error(ErrorKind::ArcMultiplicity, "tangle arc " + std::to_string(l) + " occurs " +
                                                  std::to_string(count) + " times");
    }
  }
}

bool operator==(const TangleCode& a, const TangleCode& b) {
  return a.crossings == b.crossings && a.endpoints == b.endpoints && a.arcs == b.arcs &&
         a.slots == b.slots;
}

}  // namespace symknot::diagram
