#include "symknot/error.hpp"
#include "symknot/jones/jones.hpp"

namespace symknot::jones {

using algebra::Variable;

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe) {
  // (-A^3)^-w = (-1)^w A^(-3w)
  LaurentPoly f = bracket.shifted_half(-6 * writhe);
  if (writhe % 2 != 0) f = -f;
  // A^e -> t^(-e/4); in half units h -> -h/4.
  return f.exponents_divided(-4).with_variable(Variable::t);
}

LaurentPoly jones(const PlanarDiagram& d, int max_crossings) {
  LaurentPoly v = jones_from_bracket(kauffman_bracket(d, max_crossings), d.counts().writhe);
  if (d.components() == 1 && !v.integral_exponents()) {
    throw Error(ErrorKind::Integrity, "knot Jones polynomial with half-integer exponents");
  }
  return v;
}

algebra::BigInt determinant(const PlanarDiagram& d) {
  if (d.components() != 1) throw Error(ErrorKind::NotAKnot, "determinant is defined here for knots");
  algebra::Rational v = jones(d).evaluate(-1);
  algebra::BigInt n = v.numerator();
  return n < 0 ? algebra::BigInt(-n) : n;
}

const char* to_string(Amphichirality a) {
  return a == Amphichirality::NotAmphichiral ? "NotAmphichiral" : "Inconclusive";
}

Amphichirality jones_amphichiral_obstruction(const PlanarDiagram& d) {
  LaurentPoly v = jones(d);
  return v == v.inverted() ? Amphichirality::Inconclusive : Amphichirality::NotAmphichiral;
}

TanakaReport verify_tanaka(const symunion::SymmetricUnionSpec& spec) {
  if (spec.half.slots != 1 || spec.twists.size() != 1) {
    throw Error(ErrorKind::InvalidArgument, "the twisting identity needs exactly one twist slot");
  }
  TanakaReport r;
  r.n = spec.twists[0];
  r.vk = jones(symunion::build_symmetric_union(spec));
  r.vj = jones(symunion::partial_knot(spec.half));
  const LaurentPoly tn = LaurentPoly::monomial(Variable::t, 1, r.n);
  const LaurentPoly sign = LaurentPoly::constant(Variable::t, r.n % 2 == 0 ? 1 : -1);
  r.lhs = tn * r.vk + sign * r.vk.inverted();
  r.rhs = (tn + sign) * r.vj * r.vj.inverted();
  r.holds = r.lhs == r.rhs;
  return r;
}

}  // namespace symknot::jones
