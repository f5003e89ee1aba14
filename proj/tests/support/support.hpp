#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "symknot/algebra/laurent.hpp"
#include "symknot/algebra/sparse_matrix.hpp"
#include "symknot/diagram/planar_diagram.hpp"
#include "symknot/diagram/tangle.hpp"

namespace support {

using symknot::algebra::LaurentPoly;
using symknot::algebra::Rational;
using symknot::diagram::PlanarDiagram;
using symknot::diagram::TangleCode;
using Rng = std::mt19937_64;

std::string fixture_path(const std::string& name);
PlanarDiagram fixture_pd(const std::string& name);

// Standard small diagrams.
PlanarDiagram trefoil_left();   // PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]
PlanarDiagram trefoil_right();
PlanarDiagram figure_eight();
PlanarDiagram hopf_link();

// Random planar diagrams from Morse movies and braid closures. Knots only
// unless `links` is set; never split.
PlanarDiagram random_knot(Rng& rng, int max_crossings);
PlanarDiagram random_braid_knot(Rng& rng, int strands, int length);
PlanarDiagram random_diagram(Rng& rng, int max_crossings, bool links);
// Random half tangle with `slots` twist slots whose partial knot is a knot.
TangleCode random_half(Rng& rng, int slots, int max_crossings, int min_crossings = 0);

// Oracles.
LaurentPoly naive_bracket(const PlanarDiagram& d);
LaurentPoly laplace_determinant(const std::vector<std::vector<LaurentPoly>>& m);
int dense_rank(std::vector<std::vector<Rational>> m);
std::vector<std::vector<Rational>> to_dense(const symknot::algebra::SparseRationalMatrix& m);
// V - E + F = 2 on every connected piece of the 4-valent graph.
bool is_planar(const PlanarDiagram& d);

// Local moves.
PlanarDiagram add_kink(const PlanarDiagram& d, int arc, bool positive);
// Pushes the arc at `slot` of `crossing` across the arc at the next slot
// counterclockwise, making a bigon.
PlanarDiagram add_bigon(const PlanarDiagram& d, int crossing, int slot, bool first_over);

}  // namespace support
