#include <doctest.h>

#include "support.hpp"
#include "symknot/diagram/pd_io.hpp"
#include "symknot/error.hpp"
#include "symknot/jones/jones.hpp"
#include "symknot/khovanov/khovanov.hpp"

using namespace symknot::khovanov;
using symknot::Error;
using symknot::ErrorKind;
using symknot::algebra::LaurentPoly;
using symknot::algebra::Variable;
using symknot::diagram::PlanarDiagram;
using symknot::jones::Amphichirality;
namespace diagram = symknot::diagram;
namespace symunion = symknot::symunion;

namespace {

BigradedDims table(std::initializer_list<std::tuple<int, int, long long>> entries) {
  BigradedDims d;
  for (auto [i, j, n] : entries) d.add(i, j, n);
  return d;
}

// Homology from dense ranks of each block of the same cube.
BigradedDims dense_homology(const CubeComplex& cube) {
  BigradedDims out;
  for (const auto& [bg, dim] : cube.chain_dims().entries()) {
    auto [i, j] = bg;
    int r_out = support::dense_rank(support::to_dense(cube.differential(i, j)));
    int r_in = support::dense_rank(support::to_dense(cube.differential(i - 1, j)));
    out.add(i, j, dim - r_out - r_in);
  }
  return out;
}

LaurentPoly euler_from_jones(const PlanarDiagram& d) {
  LaurentPoly v = symknot::jones::jones(d);
  // t^(1/2) = -q, so t^(h/2) becomes (-1)^h q^h.
  LaurentPoly in_q(Variable::q);
  for (const auto& [h, c] : v.terms()) in_q += LaurentPoly::monomial(Variable::q, h % 2 ? -c : c, h);
  return (LaurentPoly::monomial(Variable::q, 1, 1) + LaurentPoly::monomial(Variable::q, 1, -1)) * in_q;
}

std::vector<PlanarDiagram> small_suite(int count, int max_crossings, uint64_t seed) {
  support::Rng rng(seed);
  std::vector<PlanarDiagram> out{PlanarDiagram::unknot(), support::trefoil_left(), support::trefoil_right(),
                                 support::figure_eight(), support::hopf_link()};
  for (int k = 0; k < count; ++k) out.push_back(support::random_diagram(rng, max_crossings, true));
  return out;
}

}  // namespace

TEST_CASE("unknot homology") {
  const BigradedDims expected = table({{0, -1, 1}, {0, 1, 1}});
  CHECK(khovanov_homology(PlanarDiagram::unknot()) == expected);
  CHECK(khovanov_homology(diagram::parse_pd("PD[X[1,1,2,2]]")) == expected);
  CHECK(khovanov_homology(diagram::parse_pd("PD[X[2,1,1,2]]")) == expected);
  CHECK(reduced_khovanov(PlanarDiagram::unknot(), 1) == table({{0, 0, 1}}));
  CHECK(reduced_khovanov(diagram::parse_pd("PD[X[1,1,2,2]]"), 2) == table({{0, 0, 1}}));
  CubeComplex cube = CubeComplex::build(PlanarDiagram::unknot());
  CHECK(cube.vertex_count() == 1);
  CHECK(cube.chain_dims() == expected);
}

TEST_CASE("trefoil tables against the dense oracle") {
  const BigradedDims left = khovanov_homology(support::trefoil_left());
  CHECK(left == dense_homology(CubeComplex::build(support::trefoil_left())));
  CHECK(left == table({{0, -1, 1}, {0, -3, 1}, {-2, -5, 1}, {-3, -9, 1}}));
  CHECK(khovanov_homology(support::trefoil_right()) == left.reflected());
  CHECK(khovanov_homology(support::figure_eight()) ==
        table({{-2, -5, 1}, {-1, -1, 1}, {0, -1, 1}, {0, 1, 1}, {1, 1, 1}, {2, 5, 1}}));
}

TEST_CASE("cancellation matches dense ranks on random diagrams") {
  for (const auto& d : small_suite(40, 7, 31)) {
    CubeComplex cube = CubeComplex::build(d);
    CHECK(khovanov_homology(cube) == dense_homology(cube));
  }
}

TEST_CASE("d squared vanishes and chain size counts states") {
  for (const auto& d : small_suite(30, 8, 32)) {
    CubeComplex cube = CubeComplex::build(d);
    long long states = 0;
    for (int v = 0; v < cube.vertex_count(); ++v) states += 1LL << cube.circles(v);
    CHECK(cube.chain_dims().total() == states);
    for (const auto& [bg, dim] : cube.chain_dims().entries()) {
      auto [i, j] = bg;
      auto d1 = cube.differential(i, j);
      auto d2 = cube.differential(i + 1, j);
      if (d1.rows() == 0 || d2.rows() == 0) continue;
      CHECK((d2 * d1).entries().empty());
    }
  }
}

TEST_CASE("euler characteristic reproduces jones") {
  for (const auto& d : small_suite(60, 10, 33)) {
    CHECK(graded_euler(khovanov_homology(d)) == euler_from_jones(d));
  }
  CHECK(graded_euler(table({{0, -1, 1}, {0, 1, 1}})) ==
        LaurentPoly::monomial(Variable::q, 1, 1) + LaurentPoly::monomial(Variable::q, 1, -1));
  LaurentPoly fig8 = graded_euler(khovanov_homology(support::figure_eight()));
  CHECK(fig8 == fig8.inverted());
}

TEST_CASE("mirror duality") {
  for (const auto& d : small_suite(25, 8, 34)) {
    CHECK(khovanov_homology(diagram::mirror(d)) == khovanov_homology(d).reflected());
  }
}

TEST_CASE("reduced homology: euler characteristic and basepoint independence") {
  support::Rng rng(35);
  std::vector<PlanarDiagram> knots{support::trefoil_left(), support::figure_eight()};
  for (int k = 0; k < 15; ++k) knots.push_back(support::random_knot(rng, 8));
  for (const auto& d : knots) {
    const BigradedDims full = khovanov_homology(d);
    const BigradedDims first = reduced_khovanov(d, d.arcs().front());
    const LaurentPoly q_plus = LaurentPoly::monomial(Variable::q, 1, 1) + LaurentPoly::monomial(Variable::q, 1, -1);
    CHECK(graded_euler(first) * q_plus == graded_euler(full));
    CHECK(first.total() < full.total());
    for (int arc : d.arcs()) CHECK(reduced_khovanov(d, arc) == first);
  }
  CHECK_THROWS_AS(reduced_khovanov(support::trefoil_left(), 99), Error);
}

TEST_CASE("over the rationals reduced homology is not half of unreduced") {
  // Thin knots have rank det + 1 unreduced and det reduced.
  CHECK(khovanov_homology(support::trefoil_left()).total() == 4);
  CHECK(reduced_khovanov(support::trefoil_left(), 1).total() == 3);
  CHECK(khovanov_homology(support::figure_eight()).total() == 6);
  CHECK(reduced_khovanov(support::figure_eight(), 1).total() == 5);
}

TEST_CASE("two-dimensional homology only for unknots") {
  support::Rng rng(36);
  for (int k = 0; k < 40; ++k) {
    PlanarDiagram d = support::random_knot(rng, 9);
    if (khovanov_homology(d).total() == 2) CHECK(symknot::jones::jones(d).is_one());
  }
}

TEST_CASE("lee homology and the s invariant") {
  CHECK(lee_s_invariant(PlanarDiagram::unknot()) == 0);
  CHECK(lee_s_invariant(support::trefoil_right()) == 2);
  CHECK(lee_s_invariant(support::trefoil_left()) == -2);
  CHECK(lee_s_invariant(support::figure_eight()) == 0);
  LeeHomology hopf = lee_homology(support::hopf_link());
  CHECK(hopf.generators.size() == 4);
  support::Rng rng(37);
  for (int k = 0; k < 25; ++k) {
    PlanarDiagram d = support::random_knot(rng, 9);
    LeeHomology lee = lee_homology(d);
    for (int jump : lee.stages) CHECK(jump % 4 == 0);
    int s = s_from_lee(lee);
    CHECK(lee_s_invariant(diagram::mirror(d)) == -s);
    CHECK(s % 2 == 0);
  }
  CHECK_THROWS_AS(lee_s_invariant(support::hopf_link()), Error);
}

TEST_CASE("lee survivors of symmetric unions sit at (0, +-1)") {
  support::Rng rng(38);
  for (int k = 0; k < 10; ++k) {
    symunion::SymmetricUnionSpec spec{support::random_half(rng, 1, 3), {std::uniform_int_distribution<int>(-2, 2)(rng)}, ""};
    PlanarDiagram d = symunion::build_symmetric_union(spec);
    if (d.crossing_count() > 9) continue;
    LeeHomology lee = lee_homology(d);
    REQUIRE(lee.generators.size() == 2);
    CHECK(lee.generators[0] == Bigrading{0, -1});
    CHECK(lee.generators[1] == Bigrading{0, 1});
  }
}

TEST_CASE("skein sequence on a negative kink") {
  PlanarDiagram kink = diagram::parse_pd("PD[X[2,1,1,2]]");
  REQUIRE(kink.sign(0) < 0);
  SkeinReport r = skein_les_verify(kink, 0);
  CHECK(r.ok());
  CHECK(r.kh_d == table({{0, -1, 1}, {0, 1, 1}}));
  CHECK_THROWS_AS(skein_les_verify(diagram::parse_pd("PD[X[1,1,2,2]]"), 0), Error);
}

TEST_CASE("skein sequence is exact on random negative crossings") {
  support::Rng rng(39);
  int checked = 0;
  for (int k = 0; k < 40 && checked < 12; ++k) {
    PlanarDiagram d = support::random_diagram(rng, 7, true);
    for (int c = 0; c < d.crossing_count(); ++c) {
      if (d.sign(c) > 0) continue;
      SkeinReport r = skein_les_verify(d, c);
      CHECK_MESSAGE(r.ok(), (r.failures.empty() ? std::string() : r.failures.front()));
      ++checked;
      break;
    }
  }
  CHECK(checked >= 12);
}

TEST_CASE("axis crossings of one-slot unions have c = -1") {
  support::Rng rng(40);
  for (int k = 0; k < 6; ++k) {
    symunion::SymmetricUnionSpec spec{support::random_half(rng, 1, 3), {1 + k % 2}, ""};
    AxisSkeinReport r = skein_axis_verify(spec);
    CHECK(r.c_is_minus_one);
    CHECK(r.link_has_two_components);
    CHECK(r.skein.ok());
  }
}

TEST_CASE("maximal bigrading") {
  CHECK_FALSE(maximal_bigrading(table({{0, -1, 1}, {0, 1, 1}}), 0).has_value());
  auto m = maximal_bigrading(khovanov_homology(support::trefoil_right()), 2);
  REQUIRE(m.has_value());
  CHECK(m->a == 3);
  CHECK(m->b == 9);
  CHECK_THROWS_AS(maximal_bigrading(table({{0, 1, 1}}), 0), Error);
}

TEST_CASE("khovanov symmetry check") {
  CHECK(kh_symmetry_check(khovanov_homology(PlanarDiagram::unknot())) == Amphichirality::Inconclusive);
  CHECK(kh_symmetry_check(khovanov_homology(support::figure_eight())) == Amphichirality::Inconclusive);
  CHECK(kh_symmetry_check(khovanov_homology(support::trefoil_left())) == Amphichirality::NotAmphichiral);
}

TEST_CASE("bigraded tables serialize") {
  BigradedDims t = khovanov_homology(support::figure_eight());
  CHECK(BigradedDims::from_json(t.to_json()) == t);
  CHECK(t.to_json().dump() == R"({"-1,-1":1,"-2,-5":1,"0,-1":1,"0,1":1,"1,1":1,"2,5":1})");
  CHECK(t.grid().find("j\\i") != std::string::npos);
  CHECK_THROWS_AS(BigradedDims::from_json(nlohmann::json::parse(R"({"1;2":1})")), Error);
}

TEST_CASE("family experiment on a trivial half is vacuous") {
  diagram::TangleCode t;
  t.slots = 1;
  t.endpoints = {1, 2, 3, 4};
  t.arcs = {{1, 2}, {3, 4}};
  FamilyReport r = family_experiment(t, 1, 3);
  CHECK(r.vacuous);
  CHECK(r.message == "no nontrivial member found");
}

TEST_CASE("resource limit") {
  support::Rng rng(41);
  PlanarDiagram d = support::random_braid_knot(rng, 3, 16);
  try {
    khovanov_homology(d, 12);
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}
