#include "reducer.hpp"
#include "symknot/error.hpp"
#include "symknot/khovanov/khovanov.hpp"

namespace symknot::khovanov {

namespace {

ChainReducer load(const CubeComplex& cube, Differential kind) {
  ChainReducer r;
  for (int g = 0; g < cube.generator_count(); ++g) r.add_generator(cube.hdeg(g), cube.qdeg(g));
  cube.for_each_edge(kind, [&](const CubeEdge& e) { r.add_entry(e.source, e.target, e.coefficient); });
  return r;
}

}  // namespace

BigradedDims khovanov_homology(const CubeComplex& cube) {
  ChainReducer r = load(cube, Differential::Khovanov);
  if (auto j = r.min_jump(); j && *j != 0) {
    throw Error(ErrorKind::Integrity, "Khovanov differential does not preserve quantum grading");
  }
  r.cancel(std::nullopt);
  BigradedDims dims;
  for (int g : r.survivors()) dims.add(r.hdeg(g), r.qdeg(g), 1);
  return dims;
}

BigradedDims khovanov_homology(const PlanarDiagram& d, int max_crossings) {
  return khovanov_homology(CubeComplex::build(d, {max_crossings, std::nullopt}));
}

BigradedDims reduced_khovanov(const PlanarDiagram& d, int basepoint, int max_crossings) {
  return khovanov_homology(CubeComplex::build(d, {max_crossings, basepoint}));
}

LeeHomology lee_homology(const PlanarDiagram& d, int max_crossings) {
  const CubeComplex cube = CubeComplex::build(d, {max_crossings, std::nullopt});
  ChainReducer r = load(cube, Differential::Lee);
  LeeHomology lee;
  while (auto jump = r.min_jump()) {
    if (*jump < 0 || *jump % 4 != 0) {
      throw Error(ErrorKind::Integrity, "Lee differential component with quantum jump " + std::to_string(*jump));
    }
    lee.stages.push_back(*jump);
    r.cancel(*jump);
  }
  for (int g : r.survivors()) lee.generators.emplace_back(r.hdeg(g), r.qdeg(g));
  std::sort(lee.generators.begin(), lee.generators.end());
  return lee;
}

int s_from_lee(const LeeHomology& lee) {
  if (lee.generators.size() != 2) {
    throw Error(ErrorKind::Integrity,
                "Lee homology of a knot must be 2-dimensional, got " + std::to_string(lee.generators.size()));
  }
  const auto& [i0, q0] = lee.generators[0];
  const auto& [i1, q1] = lee.generators[1];
  if (i0 != 0 || i1 != 0 || q1 - q0 != 2) {
    throw Error(ErrorKind::Integrity, "Lee generators must sit in homological grading 0, two apart in q");
  }
  return (q0 + q1) / 2;
}

int lee_s_invariant(const PlanarDiagram& d, int max_crossings) {
  if (d.components() != 1) throw Error(ErrorKind::NotAKnot, "the s-invariant is defined for knots");
  return s_from_lee(lee_homology(d, max_crossings));
}

}  // namespace symknot::khovanov
