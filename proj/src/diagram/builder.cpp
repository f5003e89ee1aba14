#include "symknot/diagram/builder.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "symknot/diagram/tangle.hpp"
#include "symknot/error.hpp"

namespace symknot::diagram {

int DiagramBuilder::new_label() {
  parent_.push_back(static_cast<int>(parent_.size()));
  oriented_ = false;
  return parent_.back();
}

int DiagramBuilder::find(int x) {
  while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
  return x;
}

int DiagramBuilder::add_crossing(const std::array<int, 4>& ccw) {
  for (int l : ccw) {
    if (l < 0 || l >= static_cast<int>(parent_.size())) {
      throw Error(ErrorKind::InvalidArgument, "unknown builder label");
    }
  }
  crossings_.push_back(ccw);
  incoming_.push_back({0, 0, 0, 0});
  hint_.push_back({0, 0, 0, 0});
  oriented_ = false;
  return crossing_count() - 1;
}

void DiagramBuilder::join(int a, int b) {
  parent_[find(a)] = find(b);
  oriented_ = false;
}

void DiagramBuilder::flip(int c) {
  auto rotate = [](auto& arr) { std::rotate(arr.begin(), arr.begin() + 1, arr.end()); };
  rotate(crossings_[c]);
  rotate(incoming_[c]);
  rotate(hint_[c]);
}

void DiagramBuilder::prefer_incoming(int c, int slot) { hint_[c][slot] = 1; }

void DiagramBuilder::orient() {
  const int n = crossing_count();
  // Class -> the (crossing, slot) ends it meets.
  std::unordered_map<int, std::vector<std::pair<int, int>>> ends;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) ends[find(crossings_[c][s])].emplace_back(c, s);
  }
  for (const auto& [cls, list] : ends) {
    if (list.size() != 2) {
      throw Error(ErrorKind::Integrity, "strand end left open while building a closed diagram");
    }
  }
  auto other_end = [&](int c, int s) {
    const auto& list = ends[find(crossings_[c][s])];
    return list[0] == std::pair(c, s) ? list[1] : list[0];
  };

  std::vector<std::array<char, 4>> done(n, {0, 0, 0, 0});
  for (int c0 = 0; c0 < n; ++c0) {
    for (int s0 = 0; s0 < 4; ++s0) {
      if (done[c0][s0]) continue;
      // Walk entering at (c0, s0).
      std::vector<std::pair<int, int>> entered;
      int c = c0, s = s0;
      while (!done[c][s]) {
        done[c][s] = 1;
        done[c][(s + 2) % 4] = 1;
        incoming_[c][s] = 1;
        incoming_[c][(s + 2) % 4] = 0;
        entered.emplace_back(c, s);
        std::tie(c, s) = other_end(c, (s + 2) % 4);
      }
      // Respect the first hint met along the walk.
      bool reverse = false;
      for (auto [hc, hs] : entered) {
        if (hint_[hc][hs]) break;
        if (hint_[hc][(hs + 2) % 4]) {
          reverse = true;
          break;
        }
      }
      if (reverse) {
        for (auto [hc, hs] : entered) {
          incoming_[hc][hs] = 0;
          incoming_[hc][(hs + 2) % 4] = 1;
        }
      }
    }
  }
  oriented_ = true;
}

int DiagramBuilder::sign(int c) const {
  if (!oriented_) throw Error(ErrorKind::Precondition, "orient() must run before reading signs");
  const auto& in = incoming_[c];
  int over_in = in[1] ? 1 : 3;
  if (in[2]) over_in = (over_in + 2) % 4;
  return over_in == 3 ? 1 : -1;
}

int DiagramBuilder::free_loop_count() {
  std::vector<char> used(parent_.size(), 0);
  for (const auto& x : crossings_) {
    for (int l : x) used[find(l)] = 1;
  }
  int loops = 0;
  for (int l = 0; l < static_cast<int>(parent_.size()); ++l) {
    if (find(l) == l && !used[l]) ++loops;
  }
  return loops;
}

PlanarDiagram DiagramBuilder::build(Splitting split) {
  if (!oriented_) orient();
  const int n = crossing_count();
  std::unordered_map<int, std::vector<std::pair<int, int>>> ends;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) ends[find(crossings_[c][s])].emplace_back(c, s);
  }
  // Number arcs consecutively along each component.
  std::unordered_map<int, int> number;
  int counter = 0;
  for (int c0 = 0; c0 < n; ++c0) {
    for (int s0 = 0; s0 < 4; ++s0) {
      if (!incoming_[c0][s0] || number.count(find(crossings_[c0][s0]))) continue;
      int c = c0, s = s0;
      while (!number.count(find(crossings_[c][s]))) {
        number[find(crossings_[c][s])] = ++counter;
        int out = (s + 2) % 4;
        const auto& list = ends[find(crossings_[c][out])];
        auto nxt = list[0] == std::pair(c, out) ? list[1] : list[0];
        std::tie(c, s) = nxt;
      }
    }
  }
  std::vector<Crossing> xs;
  xs.reserve(n);
  for (int c = 0; c < n; ++c) {
    int start = incoming_[c][0] ? 0 : 2;
    Crossing x;
    for (int k = 0; k < 4; ++k) x[k] = number.at(find(crossings_[c][(start + k) % 4]));
    xs.push_back(x);
  }
  return PlanarDiagram(std::move(xs), free_loop_count(), split);
}

TangleCode DiagramBuilder::build_tangle(const std::vector<int>& endpoints, int slots) {
  TangleCode t;
  t.slots = slots;
  std::map<int, int> number;
  int counter = 0;
  auto label = [&](int l) {
    int r = find(l);
    auto it = number.find(r);
    if (it != number.end()) return it->second;
    number.emplace(r, ++counter);
    return counter;
  };
  std::map<int, int> uses;
  for (const auto& x : crossings_) {
    for (int l : x) ++uses[find(l)];
  }
  std::map<int, std::vector<int>> ends_of_class;
  for (int e : endpoints) {
    ends_of_class[find(e)].push_back(e);
    t.endpoints.push_back(label(e));
  }
  for (const auto& x : crossings_) t.crossings.push_back({label(x[0]), label(x[1]), label(x[2]), label(x[3])});
  // A class with two loose ends and no crossing is a straight arc; split it
  // into two endpoint labels.
  for (auto& [cls, list] : ends_of_class) {
    if (list.size() == 2 && uses[cls] == 0) {
      int second = ++counter;
      auto pos = std::find(endpoints.begin(), endpoints.end(), list[1]) - endpoints.begin();
      t.endpoints[pos] = second;
      t.arcs.emplace_back(number.at(cls), second);
    }
  }
  if (free_loop_count() > static_cast<int>(std::count_if(ends_of_class.begin(), ends_of_class.end(), [&](const auto& kv) {
        return uses[kv.first] == 0;
      }))) {
    throw Error(ErrorKind::InvalidArgument, "tangle contains a closed loop");
  }
  t.validate();
  return t;
}

}  // namespace symknot::diagram
