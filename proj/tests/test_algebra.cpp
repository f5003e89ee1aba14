#include <doctest.h>

#include "support.hpp"
#include "symknot/algebra/laurent.hpp"
#include "symknot/algebra/sparse_matrix.hpp"
#include "symknot/error.hpp"

using namespace symknot;
using namespace symknot::algebra;

namespace {

LaurentPoly t_pow(int e, long c = 1) { return LaurentPoly::monomial(Variable::t, c, e); }

LaurentPoly random_poly(support::Rng& rng) {
  std::uniform_int_distribution<int> exp(-6, 6), coef(-5, 5), len(0, 5);
  LaurentPoly p(Variable::t);
  int n = len(rng);
  for (int i = 0; i < n; ++i) p += LaurentPoly::half_monomial(Variable::t, coef(rng), exp(rng));
  return p;
}

SparseRationalMatrix random_matrix(support::Rng& rng, int rows, int cols, double density) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  std::vector<Triplet> t;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (u(rng) < density) t.push_back({r, c, Rational(num(rng), den(rng))});
    }
  }
  return SparseRationalMatrix::from_triplets(rows, cols, std::move(t));
}

}  // namespace

TEST_CASE("rational arithmetic stays exact across the 64-bit boundary") {
  Rational big(INT64_MAX);
  Rational sum = big + big;
  CHECK(sum.to_string() == "18446744073709551614");
  CHECK(sum - big == big);
  Rational third(1, 3);
  CHECK(third * 3 == Rational(1));
  CHECK((Rational(2, 4)).to_string() == "1/2");
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  Rational huge = Rational(INT64_MAX) * Rational(INT64_MAX);
  CHECK((huge / Rational(INT64_MAX)) == Rational(INT64_MAX));
}

TEST_CASE("laurent examples") {
  LaurentPoly a = t_pow(1) + t_pow(-1);
  LaurentPoly b = t_pow(1) - t_pow(-1);
  CHECK(a * b == t_pow(2) - t_pow(-2));
  CHECK(t_pow(3).inverted() == t_pow(-3));
  CHECK(LaurentPoly::constant(Variable::t, 1).evaluate(-1) == Rational(1));
  CHECK(t_pow(2).substitute_power(3) == t_pow(6));
  CHECK((t_pow(1) - t_pow(1)).is_zero());
  CHECK((t_pow(1) - t_pow(1)).terms().empty());
}

TEST_CASE("laurent variable mismatch is a typed error") {
  LaurentPoly p = t_pow(1);
  LaurentPoly q = LaurentPoly::monomial(Variable::q, 1, 1);
  try {
    p + q;
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::VariableMismatch);
  }
  CHECK_THROWS_AS(p.substitute_power(0), Error);
}

TEST_CASE("laurent canonical text round trips") {
  LaurentPoly p = t_pow(-2, 3) + LaurentPoly::half_monomial(Variable::t, -1, 1) + t_pow(0, 7);
  CHECK(p.to_string() == "3*t^(-2) + 7*t^(0) + -1*t^(1/2)");
  CHECK(LaurentPoly::parse(p.to_string()) == p);
  CHECK(LaurentPoly(Variable::q).to_string() == "0");
  CHECK_THROWS_AS(LaurentPoly::parse("3*t^(1/4)"), Error);
  CHECK_THROWS_AS(LaurentPoly::parse("3*t^(2/2)"), Error);
}

TEST_CASE("laurent ring laws on random polynomials") {
  support::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.inverted().inverted() == a);
    const LaurentPoly ab = a * b;
    for (const auto& [h, coef] : ab.terms()) CHECK(coef != 0);
  }
}

TEST_CASE("exact polynomial division") {
  support::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(divide_exact(a * b, b) == a);
  }
  CHECK_THROWS_AS(divide_exact(t_pow(0) + t_pow(1), t_pow(0, 2)), Error);
}

TEST_CASE("rank and kernel small examples") {
  auto id = SparseRationalMatrix::identity(2);
  auto rk = rank_and_kernel(id);
  CHECK(rk.rank == 2);
  CHECK(rk.kernel_dimension == 0);
  auto row = SparseRationalMatrix::from_triplets(1, 2, {{0, 0, 1}, {0, 1, 1}});
  rk = rank_and_kernel(row);
  CHECK(rk.rank == 1);
  CHECK(rk.kernel_dimension == 1);
  CHECK(row.apply(rk.kernel_basis[0]).empty());
}

TEST_CASE("rank agrees with the dense elimination oracle") {
  support::Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    int rows = std::uniform_int_distribution<int>(1, 12)(rng);
    int cols = std::uniform_int_distribution<int>(1, 12)(rng);
    auto m = random_matrix(rng, rows, cols, i % 2 ? 0.3 : 0.7);
    int expected = support::dense_rank(support::to_dense(m));
    CHECK(rank(m) == expected);
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank == expected);
    CHECK(rk.rank + rk.kernel_dimension == cols);
    for (const auto& v : rk.kernel_basis) CHECK(m.apply(v).empty());
    // Kernel vectors are independent: stacking them has full rank.
    if (!rk.kernel_basis.empty()) {
      auto k = SparseRationalMatrix::from_columns(cols, rk.kernel_basis);
      CHECK(rank(k) == rk.kernel_dimension);
    }
  }
}

TEST_CASE("6x6 rational matrices against the dense oracle") {
  support::Rng rng(66);
  for (int i = 0; i < 50; ++i) {
    auto m = random_matrix(rng, 6, 6, 0.5);
    CHECK(rank(m) == support::dense_rank(support::to_dense(m)));
  }
}

TEST_CASE("rank is transpose invariant up to 50x50") {
  support::Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    int rows = std::uniform_int_distribution<int>(1, 50)(rng);
    int cols = std::uniform_int_distribution<int>(1, 50)(rng);
    auto m = random_matrix(rng, rows, cols, 0.08);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("sparse product matches dense product") {
  support::Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    auto a = random_matrix(rng, 5, 7, 0.4);
    auto b = random_matrix(rng, 7, 4, 0.4);
    auto p = support::to_dense(a * b);
    auto da = support::to_dense(a), db = support::to_dense(b);
    for (int r = 0; r < 5; ++r) {
      for (int c = 0; c < 4; ++c) {
        Rational s;
        for (int k = 0; k < 7; ++k) s += da[r][k] * db[k][c];
        CHECK(p[r][c] == s);
      }
    }
  }
}
