#include "symknot/diagram/planar_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "symknot/diagram/builder.hpp"
#include "symknot/diagram/pd_io.hpp"
#include "symknot/error.hpp"

namespace symknot::diagram {

namespace {

struct Occurrence {
  int crossing;
  int slot;
};

std::unordered_map<int, std::vector<Occurrence>> occurrences(const std::vector<Crossing>& xs) {
  std::unordered_map<int, std::vector<Occurrence>> occ;
  for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
    for (int s = 0; s < 4; ++s) occ[xs[i][s]].push_back({i, s});
  }
  return occ;
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, int free_loops, Splitting split)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  validate(split);
}

void PlanarDiagram::validate(Splitting split) {
  if (free_loops_ < 0) throw Error(ErrorKind::InvalidArgument, "negative free loop count");
  if (crossings_.empty() && free_loops_ == 0) {
    throw Error(ErrorKind::InvalidArgument, "empty diagram");
  }
  const int n = crossing_count();
  auto occ = occurrences(crossings_);
  for (const auto& [label, list] : occ) {
    if (label <= 0) {
      throw Error(ErrorKind::MalformedSyntax, "arc labels must be positive, got " + std::to_string(label));
    }
    if (list.size() != 2) {
      throw Error(ErrorKind::ArcMultiplicity, "arc " + std::to_string(label) + " occurs " +
                                                  std::to_string(list.size()) + " times");
    }
  }

  // Over-strand direction per crossing: 0 means d -> b, 1 means b -> d. Each
  // arc needs exactly one incoming end, which is either forced by the
  // under-strand or ties two over-strand directions together.
  std::vector<int> dir(n, -1);
  std::vector<std::vector<std::pair<int, int>>> ties(n);
  auto fail = [](int label) {
    return Error(ErrorKind::Orientation, "no consistent orientation at arc " + std::to_string(label));
  };
  std::queue<int> work;
  std::vector<std::pair<int, int>> forced;
  for (const auto& [label, list] : occ) {
    const Occurrence& p = list[0];
    const Occurrence& q = list[1];
    auto fixed = [](const Occurrence& o) { return o.slot % 2 == 0; };
    // incoming = dir ^ flip for over slots; slot 1 is incoming when dir=1.
    auto flip = [](const Occurrence& o) { return o.slot == 3 ? 1 : 0; };
    if (fixed(p) && fixed(q)) {
      if ((p.slot == 0) == (q.slot == 0)) throw fail(label);
    } else if (fixed(p) || fixed(q)) {
      const Occurrence& f = fixed(p) ? p : q;
      const Occurrence& v = fixed(p) ? q : p;
      int f_in = f.slot == 0 ? 1 : 0;
      forced.emplace_back(v.crossing, 1 ^ f_in ^ flip(v));
    } else if (p.crossing == q.crossing) {
      if ((flip(p) ^ flip(q)) != 1) throw fail(label);
    } else {
      int parity = 1 ^ flip(p) ^ flip(q);
      ties[p.crossing].emplace_back(q.crossing, parity);
      ties[q.crossing].emplace_back(p.crossing, parity);
    }
  }
  auto propagate = [&](int start) {
    work.push(start);
    while (!work.empty()) {
      int c = work.front();
      work.pop();
      for (auto [o, parity] : ties[c]) {
        int want = dir[c] ^ parity;
        if (dir[o] < 0) {
          dir[o] = want;
          work.push(o);
        } else if (dir[o] != want) {
          throw Error(ErrorKind::Orientation, "inconsistent over-strand directions");
        }
      }
    }
  };
  for (auto [c, v] : forced) {
    if (dir[c] >= 0) {
      if (dir[c] != v) throw Error(ErrorKind::Orientation, "inconsistent over-strand directions");
      continue;
    }
    dir[c] = v;
    propagate(c);
  }
  for (int c = 0; c < n; ++c) {
    if (dir[c] < 0) {
      dir[c] = 0;
      propagate(c);
    }
  }
  signs_.resize(n);
  for (int c = 0; c < n; ++c) signs_[c] = dir[c] == 0 ? 1 : -1;

  // Connectivity of the 4-valent graph.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [label, list] : occ) parent[find(list[0].crossing)] = find(list[1].crossing);
  int pieces = free_loops_;
  for (int c = 0; c < n; ++c) pieces += find(c) == c ? 1 : 0;
  split_ = pieces > 1;
  if (split_ && split == Splitting::Reject) {
    throw Error(ErrorKind::SplitDiagram, "diagram is split into " + std::to_string(pieces) + " pieces");
  }
}

bool PlanarDiagram::is_incoming(int crossing, int slot) const {
  if (slot == 0) return true;
  if (slot == 2) return false;
  return slot == over_incoming_slot(crossing);
}

std::pair<int, int> PlanarDiagram::head(int label) const {
  for (int c = 0; c < crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      if (crossings_[c][s] == label && is_incoming(c, s)) return {c, s};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no arc " + std::to_string(label));
}

std::pair<int, int> PlanarDiagram::tail(int label) const {
  for (int c = 0; c < crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      if (crossings_[c][s] == label && !is_incoming(c, s)) return {c, s};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no arc " + std::to_string(label));
}

std::vector<std::vector<int>> PlanarDiagram::component_arcs() const {
  // next[label] = arc leaving the crossing this one enters.
  std::unordered_map<int, int> next;
  for (int c = 0; c < crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      if (is_incoming(c, s)) next[crossings_[c][s]] = crossings_[c][(s + 2) % 4];
    }
  }
  std::vector<std::vector<int>> out;
  std::unordered_map<int, char> seen;
  for (int label : arcs()) {
    if (seen[label]) continue;
    std::vector<int> comp;
    int x = label;
    while (!seen[x]) {
      seen[x] = 1;
      comp.push_back(x);
      x = next.at(x);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

int PlanarDiagram::components() const {
  return static_cast<int>(component_arcs().size()) + free_loops_;
}

CrossingCounts PlanarDiagram::counts() const {
  CrossingCounts c;
  c.components = components();
  for (int s : signs_) (s > 0 ? c.positive : c.negative) += 1;
  c.writhe = c.positive - c.negative;
  return c;
}

std::vector<int> PlanarDiagram::arcs() const {
  std::vector<int> labels;
  for (const auto& x : crossings_) labels.insert(labels.end(), x.begin(), x.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

bool PlanarDiagram::has_arc(int label) const {
  for (const auto& x : crossings_) {
    if (std::find(x.begin(), x.end(), label) != x.end()) return true;
  }
  return false;
}

bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
  return a.crossings() == b.crossings() && a.free_loops() == b.free_loops();
}

CrossingCounts components_and_writhe(const PlanarDiagram& d) { return d.counts(); }

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<Crossing> xs;
  xs.reserve(d.crossing_count());
  for (int i = 0; i < d.crossing_count(); ++i) {
    const Crossing& x = d.crossings()[i];
    if (d.sign(i) > 0) {
      xs.push_back({x[3], x[0], x[1], x[2]});
    } else {
      xs.push_back({x[1], x[2], x[3], x[0]});
    }
  }
  PlanarDiagram m(std::move(xs), d.free_loops(), d.is_split() ? Splitting::Allow : Splitting::Reject);
  if (!d.name().empty()) m.set_name("mirror(" + d.name() + ")");
  return m;
}

PlanarDiagram connected_sum(const PlanarDiagram& d1, int a1, const PlanarDiagram& d2, int a2) {
  if (d1.components() != 1 || d2.components() != 1) {
    throw Error(ErrorKind::NotAKnot, "connected sum needs two knot diagrams");
  }
  if (d1.crossing_count() == 0) return d2;
  if (d2.crossing_count() == 0) return d1;
  if (!d1.has_arc(a1)) throw Error(ErrorKind::InvalidArgument, "no arc " + std::to_string(a1));
  if (!d2.has_arc(a2)) throw Error(ErrorKind::InvalidArgument, "no arc " + std::to_string(a2));

  const auto labels1 = d1.arcs();
  const int shift = labels1.back();
  std::vector<Crossing> xs = d1.crossings();
  const int first2 = static_cast<int>(xs.size());
  for (Crossing x : d2.crossings()) {
    for (int& l : x) l += shift;
    xs.push_back(x);
  }
  const int b2 = a2 + shift;
  auto [h1c, h1s] = d1.head(a1);
  auto [h2c, h2s] = d2.head(a2);
  // a1 now runs into d2 and a2 runs back into d1.
  xs[h1c][h1s] = b2;
  xs[first2 + h2c][h2s] = a1;
  return PlanarDiagram(std::move(xs));
}

PlanarDiagram resolve(const PlanarDiagram& d, int crossing, int smoothing) {
  if (crossing < 0 || crossing >= d.crossing_count()) {
    throw Error(ErrorKind::InvalidArgument, "no crossing " + std::to_string(crossing));
  }
  if (smoothing != 0 && smoothing != 1) throw Error(ErrorKind::InvalidArgument, "smoothing must be 0 or 1");
  DiagramBuilder b;
  std::unordered_map<int, int> id;
  auto label = [&](int l) {
    auto it = id.find(l);
    if (it != id.end()) return it->second;
    int v = b.new_label();
    id.emplace(l, v);
    return v;
  };
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (c == crossing) continue;
    const Crossing& x = d.crossings()[c];
    int k = b.add_crossing({label(x[0]), label(x[1]), label(x[2]), label(x[3])});
    b.prefer_incoming(k, 0);
    b.prefer_incoming(k, d.over_incoming_slot(c));
  }
  const Crossing& x = d.crossings()[crossing];
  if (smoothing == 0) {
    b.join(label(x[0]), label(x[1]));
    b.join(label(x[2]), label(x[3]));
  } else {
    b.join(label(x[0]), label(x[3]));
    b.join(label(x[1]), label(x[2]));
  }
  for (int i = 0; i < d.free_loops(); ++i) {
    int l = b.new_label();
    b.join(l, l);
  }
  return b.build(Splitting::Allow);
}

PlanarDiagram relabel_from(const PlanarDiagram& d, int start_arc) {
  if (d.crossing_count() == 0) return d;
  std::unordered_map<int, int> next;
  std::unordered_map<int, std::pair<int, int>> head_of;
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      if (d.is_incoming(c, s)) {
        next[d.crossings()[c][s]] = d.crossings()[c][(s + 2) % 4];
        head_of[d.crossings()[c][s]] = {c, s};
      }
    }
  }
  std::unordered_map<int, int> fresh;
  std::vector<int> order;  // crossings in order of first visit
  std::vector<char> visited(d.crossing_count(), 0);
  int counter = 0;
  auto walk = [&](int from) {
    int x = from;
    while (!fresh.count(x)) {
      fresh[x] = ++counter;
      int c = head_of.at(x).first;
      if (!visited[c]) {
        visited[c] = 1;
        order.push_back(c);
      }
      x = next.at(x);
    }
  };
  walk(start_arc);
  // Further components start at the first unlabeled arc met at a visited
  // crossing, scanning crossings in visiting order.
  for (size_t i = 0; i < order.size(); ++i) {
    const Crossing& x = d.crossings()[order[i]];
    for (int s = 0; s < 4; ++s) {
      if (!fresh.count(x[s])) walk(x[s]);
    }
  }
  for (int l : d.arcs()) {
    if (!fresh.count(l)) walk(l);
  }
  std::vector<Crossing> xs;
  xs.reserve(d.crossing_count());
  for (int c : order) {
    Crossing y = d.crossings()[c];
    for (int& l : y) l = fresh.at(l);
    xs.push_back(y);
  }
  PlanarDiagram r(std::move(xs), d.free_loops(), d.is_split() ? Splitting::Allow : Splitting::Reject);
  r.set_name(d.name());
  return r;
}

std::string canonical_key(const PlanarDiagram& d) {
  if (d.crossing_count() == 0) return to_pd_text(d);
  std::string best;
  for (int a : d.arcs()) {
    PlanarDiagram r = relabel_from(d, a);
    std::vector<Crossing> xs = r.crossings();
    std::sort(xs.begin(), xs.end());
    PlanarDiagram sorted(std::move(xs), r.free_loops(), r.is_split() ? Splitting::Allow : Splitting::Reject);
    std::string text = to_pd_text(sorted);
    if (best.empty() || text < best) best = std::move(text);
  }
  return best;
}

}  // namespace symknot::diagram
