#include "symknot/symunion/symmetric_union.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "symknot/diagram/builder.hpp"
#include "symknot/diagram/pd_io.hpp"
#include "symknot/error.hpp"

namespace symknot::symunion {

using diagram::DiagramBuilder;

void SymmetricUnionSpec::validate() const {
  half.validate();
  if (static_cast<int>(twists.size()) != half.slots) {
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(half.slots) + " twist values, got " +
                                                std::to_string(twists.size()));
  }
}

namespace {

// Builder labels for one copy of the half.
class HalfCopy {
 public:
  HalfCopy(DiagramBuilder& b, const TangleCode& t) : b_(b) {
    for (const auto& x : t.crossings) {
      for (int l : x) id(l);
    }
    for (int e : t.endpoints) id(e);
    for (auto [u, v] : t.arcs) b_.join(id(u), id(v));
  }
  int id(int l) {
    auto it = ids_.find(l);
    if (it != ids_.end()) return it->second;
    int v = b_.new_label();
    ids_.emplace(l, v);
    return v;
  }

 private:
  DiagramBuilder& b_;
  std::map<int, int> ids_;
};

}  // namespace

SymmetricUnion build_symmetric_union_detailed(const SymmetricUnionSpec& spec) {
  spec.validate();
  partial_knot(spec.half);  // rejects halves whose closure is a link

  const TangleCode& t = spec.half;
  DiagramBuilder b;
  HalfCopy left(b, t);
  HalfCopy right(b, t);
  SymmetricUnion out{diagram::PlanarDiagram::unknot(), {}, {}, {}};
  for (const auto& x : t.crossings) {
    out.left.push_back(b.add_crossing({left.id(x[0]), left.id(x[1]), left.id(x[2]), left.id(x[3])}));
  }
  // Reflection across the axis reverses the cyclic order and keeps the
  // under-strand underneath.
  for (const auto& x : t.crossings) {
    out.right.push_back(b.add_crossing({right.id(x[0]), right.id(x[3]), right.id(x[2]), right.id(x[1])}));
  }
  const auto& e = t.endpoints;
  const int k = t.slots;
  b.join(left.id(e.front()), right.id(e.front()));
  b.join(left.id(e.back()), right.id(e.back()));

  for (int i = 1; i <= k; ++i) {
    const int n = spec.twists[i - 1];
    const int top = e[2 * i - 1];
    const int bottom = e[2 * i];
    std::vector<int> column;
    if (n == 0) {
      b.join(left.id(top), left.id(bottom));
      b.join(right.id(top), right.id(bottom));
    } else {
      int nw = left.id(top);
      int ne = right.id(top);
      for (int j = 0; j < std::abs(n); ++j) {
        bool last = j + 1 == std::abs(n);
        int sw = last ? left.id(bottom) : b.new_label();
        int se = last ? right.id(bottom) : b.new_label();
        column.push_back(b.add_crossing({sw, se, ne, nw}));
        nw = sw;
        ne = se;
      }
    }
    out.slots.push_back(std::move(column));
  }

  b.orient();
  for (size_t i = 0; i < out.slots.size(); ++i) {
    const int want = spec.twists[i] > 0 ? -1 : 1;
    for (int c : out.slots[i]) {
      if (b.sign(c) != want) b.flip(c);
    }
  }
  out.diagram = b.build();
  if (out.diagram.components() != 1) {
    throw Error(ErrorKind::NotAKnot, "symmetric union has " + std::to_string(out.diagram.components()) +
                                         " components");
  }
  out.diagram.set_name(spec.name);
  return out;
}

PlanarDiagram build_symmetric_union(const SymmetricUnionSpec& spec) {
  return build_symmetric_union_detailed(spec).diagram;
}

PlanarDiagram partial_knot(const TangleCode& half) {
  half.validate();
  DiagramBuilder b;
  HalfCopy h(b, half);
  for (const auto& x : half.crossings) b.add_crossing({h.id(x[0]), h.id(x[1]), h.id(x[2]), h.id(x[3])});
  const auto& e = half.endpoints;
  b.join(h.id(e.front()), h.id(e.back()));
  for (int i = 1; i <= half.slots; ++i) b.join(h.id(e[2 * i - 1]), h.id(e[2 * i]));
  PlanarDiagram d = b.build(diagram::Splitting::Allow);
  if (d.components() != 1) {
    throw Error(ErrorKind::NotAKnot, "partial knot closure has " + std::to_string(d.components()) +
                                         " components");
  }
  return d;
}

SymmetricUnionSpec mirror_spec(const SymmetricUnionSpec& spec) {
  SymmetricUnionSpec m = spec;
  for (int& n : m.twists) n = -n;
  return m;
}

nlohmann::json to_json(const SymmetricUnionSpec& spec) {
  nlohmann::json j;
  j["half"] = diagram::to_json(spec.half);
  j["twists"] = spec.twists;
  if (!spec.name.empty()) j["name"] = spec.name;
  return j;
}

SymmetricUnionSpec spec_from_json(const nlohmann::json& j, const std::vector<int>& default_twists) {
  if (!j.is_object() || !j.contains("half")) {
    throw Error(ErrorKind::MalformedSyntax, "spec JSON needs a \"half\" object");
  }
  SymmetricUnionSpec s;
  s.half = diagram::tangle_from_json(j["half"]);
  if (!default_twists.empty()) {
    s.twists = default_twists;
  } else if (j.contains("twists")) {
    try {
      s.twists = j["twists"].get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::MalformedSyntax, std::string("twists: ") + e.what());
    }
  } else {
    s.twists.assign(s.half.slots, 0);
  }
  if (j.contains("name") && j["name"].is_string()) s.name = j["name"].get<std::string>();
  s.validate();
  return s;
}

SymmetricUnionSpec read_spec_file(const std::string& path, const std::vector<int>& default_twists) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedSyntax, std::string("JSON: ") + e.what());
  }
  return spec_from_json(j, default_twists);
}

}  // namespace symknot::symunion
