#pragma once

#include "symknot/algebra/laurent.hpp"
#include "symknot/diagram/planar_diagram.hpp"
#include "symknot/symunion/symmetric_union.hpp"

namespace symknot::jones {

using algebra::LaurentPoly;
using diagram::PlanarDiagram;

inline constexpr int kDefaultBracketLimit = 60;

// Kauffman bracket in A, normalized so the round unknot is 1:
// <X> = A <0-smoothing> + A^-1 <1-smoothing>, each loop beyond the first
// contributing -A^2 - A^-2. Computed by sweeping crossings into a planar
// matching frontier, so the cost tracks the frontier width rather than 2^n.
LaurentPoly kauffman_bracket(const PlanarDiagram& d, int max_crossings = kDefaultBracketLimit);

// V(t) = (-A^3)^-w <D> with t = A^-4. Half-integer exponents appear only for
// links with an even number of components.
LaurentPoly jones(const PlanarDiagram& d, int max_crossings = kDefaultBracketLimit);
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);

// |V(-1)|.
algebra::BigInt determinant(const PlanarDiagram& d);

// Alexander polynomial from the Fox matrix of the Wirtinger presentation,
// shifted to a symmetric exponent range and signed so that Delta(1) = 1.
LaurentPoly alexander(const PlanarDiagram& d);
LaurentPoly canonical_alexander(const LaurentPoly& p);
// The Wirtinger-Fox matrix with one row and one column removed.
std::vector<std::vector<LaurentPoly>> alexander_matrix(const PlanarDiagram& d);
LaurentPoly polynomial_determinant(std::vector<std::vector<LaurentPoly>> m);

enum class Amphichirality { NotAmphichiral, Inconclusive };
const char* to_string(Amphichirality a);

Amphichirality jones_amphichiral_obstruction(const PlanarDiagram& d);

struct TanakaReport {
  int n = 0;
  LaurentPoly vk;
  LaurentPoly vj;
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool holds = false;
};

// t^n V_K(t) + (-1)^n V_K(t^-1) against (t^n + (-1)^n) V_J(t) V_J(t^-1) for
// K = (D u -D)(n) and J the partial knot.
TanakaReport verify_tanaka(const symunion::SymmetricUnionSpec& spec);

}  // namespace symknot::jones
