#include <doctest.h>

#include "support.hpp"
#include "symknot/jones/jones.hpp"
#include "symknot/khovanov/khovanov.hpp"
#include "symknot/symunion/symmetric_union.hpp"

using namespace symknot;
using algebra::LaurentPoly;
using symunion::SymmetricUnionSpec;

namespace {

SymmetricUnionSpec spec(const char* name) { return symunion::read_spec_file(support::fixture_path(name)); }

}  // namespace

TEST_CASE("pd fixtures") {
  CHECK(khovanov::khovanov_homology(support::fixture_pd("unknot.pd")).total() == 2);
  CHECK(jones::jones(support::fixture_pd("trefoil.pd")) == jones::jones(support::trefoil_left()));
  CHECK(jones::jones(support::fixture_pd("figure8.pd")) == jones::jones(support::figure_eight()));
}

TEST_CASE("trefoil half: partial knot and zero-twist union") {
  SymmetricUnionSpec s = spec("trefoil_half.json");
  const LaurentPoly vj = jones::jones(symunion::partial_knot(s.half));
  const LaurentPoly v_trefoil = jones::jones(support::trefoil_left());
  CHECK((vj == v_trefoil || vj == v_trefoil.inverted()));

  s.twists = {0};
  const auto d = symunion::build_symmetric_union(s);
  CHECK(jones::jones(d) == vj * vj.inverted());
  // Kh of J # -J has no cancellation at the top: its top quantum grading is
  // one above twice the top Jones degree.
  const auto kh = khovanov::khovanov_homology(d);
  const int top = (vj * vj.inverted()).max_half_exponent();
  CHECK(kh.max_quantum() == top + 1);
  CHECK(kh.max_quantum() == 7);
}

TEST_CASE("two-slot half with a figure-eight partial knot") {
  const SymmetricUnionSpec s = spec("figure8_two_slot_half.json");
  const LaurentPoly v8 = jones::jones(support::figure_eight());
  CHECK(jones::jones(symunion::partial_knot(s.half)) == v8);
  const auto d = symunion::build_symmetric_union(s);
  CHECK(d.crossing_count() == 12);
  CHECK(jones::jones(d) == v8 * v8);
  CHECK(jones::determinant(d) == 25);
}

TEST_CASE("unknot-partial half gives a nontrivial family") {
  const SymmetricUnionSpec s = spec("unknot_partial_half.json");
  CHECK(khovanov::khovanov_homology(symunion::partial_knot(s.half)).total() == 2);
  const auto r = khovanov::family_experiment(s.half, 1, 3);
  REQUIRE(r.k.has_value());
  CHECK(*r.k == 1);
  CHECK(r.passed());
  for (const auto& m : r.members) CHECK(m.nontrivial == (m.kh.total() > 2));
}
