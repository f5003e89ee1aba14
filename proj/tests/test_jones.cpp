#include <doctest.h>

#include "support.hpp"
#include "symknot/diagram/morse.hpp"
#include "symknot/diagram/pd_io.hpp"
#include "symknot/error.hpp"
#include "symknot/jones/jones.hpp"

using symknot::Error;
using symknot::ErrorKind;
namespace diagram = symknot::diagram;
namespace symunion = symknot::symunion;
namespace algebra = symknot::algebra;
using namespace symknot::jones;
using symknot::algebra::Variable;
using symknot::diagram::PlanarDiagram;
using symknot::symunion::SymmetricUnionSpec;

namespace {

LaurentPoly tp(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPoly p(Variable::t);
  for (auto [e, c] : terms) p += LaurentPoly::monomial(Variable::t, c, e);
  return p;
}

LaurentPoly ap(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPoly p(Variable::A);
  for (auto [e, c] : terms) p += LaurentPoly::monomial(Variable::A, c, e);
  return p;
}

}  // namespace

TEST_CASE("bracket normalization") {
  CHECK(kauffman_bracket(PlanarDiagram::unknot()).is_one());
  PlanarDiagram unlink = diagram::parse_pd("PD[Loop[1],Loop[2]]", diagram::Splitting::Allow);
  CHECK(kauffman_bracket(unlink) == ap({{2, -1}, {-2, -1}}));
}

TEST_CASE("bracket sweep matches naive state sum") {
  CHECK(kauffman_bracket(support::trefoil_left()) == support::naive_bracket(support::trefoil_left()));
  support::Rng rng(10);
  for (int i = 0; i < 60; ++i) {
    PlanarDiagram d = support::random_diagram(rng, 12, true);
    CHECK(kauffman_bracket(d) == support::naive_bracket(d));
  }
}

TEST_CASE("bracket resource limit") {
  support::Rng rng(1);
  PlanarDiagram d = support::random_braid_knot(rng, 3, 12);
  try {
    kauffman_bracket(d, 5);
    FAIL("expected resource error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}

TEST_CASE("jones of standard knots") {
  CHECK(jones(PlanarDiagram::unknot()).is_one());
  CHECK(jones(support::trefoil_left()) == tp({{-4, -1}, {-3, 1}, {-1, 1}}));
  CHECK(jones(support::trefoil_right()) == tp({{4, -1}, {3, 1}, {1, 1}}));
  CHECK(jones(support::figure_eight()) == tp({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}));
  LaurentPoly hopf = jones(support::hopf_link());
  CHECK_FALSE(hopf.integral_exponents());
  CHECK(hopf.size() == 2);
}

TEST_CASE("jones of the mirror inverts t") {
  support::Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    PlanarDiagram d = support::random_diagram(rng, 10, true);
    CHECK(jones(diagram::mirror(d)) == jones(d).inverted());
  }
}

TEST_CASE("jones and alexander survive Reidemeister moves") {
  support::Rng rng(13);
  std::vector<PlanarDiagram> fixtures{support::trefoil_left(), support::figure_eight()};
  for (int i = 0; i < 15; ++i) fixtures.push_back(support::random_knot(rng, 8));
  for (const auto& d : fixtures) {
    const LaurentPoly v = jones(d);
    const LaurentPoly a = alexander(d);
    for (int arc : d.arcs()) {
      for (bool pos : {true, false}) {
        PlanarDiagram k = support::add_kink(d, arc, pos);
        CHECK(jones(k) == v);
        CHECK(alexander(k) == a);
      }
    }
    for (int c = 0; c < d.crossing_count(); ++c) {
      for (int s = 0; s < 4; ++s) {
        if (d.crossings()[c][s] == d.crossings()[c][(s + 1) % 4]) continue;
        for (bool over : {true, false}) {
          PlanarDiagram b = support::add_bigon(d, c, s, over);
          CHECK(jones(b) == v);
          CHECK(alexander(b) == a);
        }
      }
    }
  }
}

TEST_CASE("braid relation (third move) and cancelling pairs") {
  support::Rng rng(14);
  const auto split = diagram::Splitting::Allow;
  for (int i = 0; i < 30; ++i) {
    std::vector<int> w;
    for (int k = 0; k < 6; ++k) w.push_back(std::uniform_int_distribution<int>(1, 3)(rng) * (k % 3 ? 1 : -1));
    std::vector<int> a = w, b = w;
    a.insert(a.begin() + 2, {1, 2, 1});
    b.insert(b.begin() + 2, {2, 1, 2});
    PlanarDiagram da = diagram::braid_closure(4, a, split);
    PlanarDiagram db = diagram::braid_closure(4, b, split);
    CHECK(jones(da) == jones(db));
    std::vector<int> c = w;
    c.insert(c.begin() + 3, {2, -2});
    CHECK(jones(diagram::braid_closure(4, c, split)) == jones(diagram::braid_closure(4, w, split)));
    if (da.components() == 1 && !da.is_split()) CHECK(alexander(da) == alexander(db));
  }
}

TEST_CASE("connected sum multiplies jones") {
  PlanarDiagram t = support::trefoil_left();
  PlanarDiagram s = diagram::connected_sum(t, 1, diagram::mirror(t), 3);
  CHECK(jones(s) == jones(t) * jones(t).inverted());
  support::Rng rng(15);
  for (int i = 0; i < 10; ++i) {
    PlanarDiagram a = support::random_knot(rng, 6), b = support::random_knot(rng, 6);
    PlanarDiagram ab = diagram::connected_sum(a, a.arcs().front(), b, b.arcs().back());
    CHECK(jones(ab) == jones(a) * jones(b));
    CHECK(alexander(ab) == canonical_alexander(alexander(a) * alexander(b)));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(PlanarDiagram::unknot()) == 1);
  CHECK(determinant(support::trefoil_left()) == 3);
  CHECK(determinant(support::figure_eight()) == 5);
  PlanarDiagram t = support::trefoil_left();
  CHECK(determinant(diagram::connected_sum(t, 1, diagram::mirror(t), 1)) == 9);
  support::Rng rng(16);
  for (int i = 0; i < 40; ++i) {
    PlanarDiagram d = support::random_knot(rng, 12);
    algebra::BigInt det = determinant(d);
    CHECK(det % 2 == 1);
    algebra::Rational at = alexander(d).evaluate(-1);
    CHECK(abs(at.numerator()) == det);
  }
}

TEST_CASE("alexander of standard knots") {
  CHECK(alexander(PlanarDiagram::unknot()).is_one());
  CHECK(alexander(support::trefoil_left()) == tp({{1, 1}, {0, -1}, {-1, 1}}));
  CHECK(alexander(support::trefoil_right()) == tp({{1, 1}, {0, -1}, {-1, 1}}));
  CHECK(alexander(support::figure_eight()) == tp({{1, -1}, {0, 3}, {-1, -1}}));
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
  support::Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    PlanarDiagram d = support::random_knot(rng, 8);
    auto m = alexander_matrix(d);
    CHECK(polynomial_determinant(m) == support::laplace_determinant(m));
  }
}

TEST_CASE("amphichirality obstruction from jones") {
  CHECK(jones_amphichiral_obstruction(support::trefoil_left()) == Amphichirality::NotAmphichiral);
  CHECK(jones_amphichiral_obstruction(support::figure_eight()) == Amphichirality::Inconclusive);
  CHECK(jones_amphichiral_obstruction(PlanarDiagram::unknot()) == Amphichirality::Inconclusive);
}

TEST_CASE("twisting identity on trivial and random halves") {
  diagram::TangleCode trivial;
  trivial.slots = 1;
  trivial.endpoints = {1, 2, 3, 4};
  trivial.arcs = {{1, 2}, {3, 4}};
  for (int n = -3; n <= 3; ++n) {
    TanakaReport r = verify_tanaka({trivial, {n}, ""});
    CHECK(r.holds);
    LaurentPoly expected = LaurentPoly::monomial(Variable::t, 1, n) + LaurentPoly::constant(Variable::t, n % 2 ? -1 : 1);
    CHECK(r.rhs == expected);
  }
  support::Rng rng(18);
  for (int i = 0; i < 20; ++i) {
    SymmetricUnionSpec spec{support::random_half(rng, 1, 5, 2), {(i % 6) - 3 + (i % 6 >= 3 ? 1 : 0)}, ""};
    TanakaReport r = verify_tanaka(spec);
    CHECK_MESSAGE(r.holds, r.lhs.to_string() << " vs " << r.rhs.to_string());
  }
  CHECK_THROWS_AS(verify_tanaka({support::random_half(rng, 2, 3), {1, 1}, ""}), Error);
}

TEST_CASE("symmetric union invariants") {
  support::Rng rng(19);
  for (int i = 0; i < 25; ++i) {
    int slots = 1 + i % 2;
    SymmetricUnionSpec spec{support::random_half(rng, slots, 5), {}, ""};
    for (int k = 0; k < slots; ++k) spec.twists.push_back(std::uniform_int_distribution<int>(-3, 3)(rng));
    PlanarDiagram k = symunion::build_symmetric_union(spec);
    LaurentPoly vj = jones(symunion::partial_knot(spec.half));
    CHECK(determinant(k) % 2 == 1);
    CHECK(jones(symunion::build_symmetric_union(symunion::mirror_spec(spec))) == jones(k).inverted());
    SymmetricUnionSpec zero = spec;
    zero.twists.assign(slots, 0);
    CHECK(jones(symunion::build_symmetric_union(zero)) == vj * vj.inverted());
  }
}
