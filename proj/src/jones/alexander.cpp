#include <numeric>
#include <unordered_map>

#include "symknot/error.hpp"
#include "symknot/jones/jones.hpp"

namespace symknot::jones {

using algebra::Variable;

std::vector<std::vector<LaurentPoly>> alexander_matrix(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  // Overarcs: the two over-slot labels of a crossing lie on the same arc of
  // the Wirtinger presentation.
  std::unordered_map<int, int> index;
  for (int l : d.arcs()) index.emplace(l, static_cast<int>(index.size()));
  std::vector<int> parent(index.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& x : d.crossings()) parent[find(index[x[1]])] = find(index[x[3]]);
  std::unordered_map<int, int> generator;
  for (size_t i = 0; i < parent.size(); ++i) {
    if (find(static_cast<int>(i)) == static_cast<int>(i)) generator.emplace(static_cast<int>(i), static_cast<int>(generator.size()));
  }
  const int g = static_cast<int>(generator.size());
  auto gen = [&](int label) { return generator.at(find(index.at(label))); };

  const LaurentPoly zero(Variable::t);
  const LaurentPoly one = LaurentPoly::constant(Variable::t, 1);
  const LaurentPoly t = LaurentPoly::monomial(Variable::t, 1, 1);
  std::vector<std::vector<LaurentPoly>> rows(n, std::vector<LaurentPoly>(g, zero));
  for (int c = 0; c < n; ++c) {
    const auto& x = d.crossings()[c];
    const int over = gen(x[1]);
    const int in = gen(x[0]);
    const int out = gen(x[2]);
    // Fox derivatives of the relation at this crossing, abelianized.
    if (d.sign(c) > 0) {
      rows[c][over] += one - t;
      rows[c][in] += t;
      rows[c][out] -= one;
    } else {
      rows[c][over] += t - one;
      rows[c][in] += one;
      rows[c][out] -= t;
    }
  }
  // Drop the last relation and the last generator.
  if (n > 0) rows.pop_back();
  for (auto& r : rows) {
    if (g > 0) r.pop_back();
  }
  return rows;
}

LaurentPoly polynomial_determinant(std::vector<std::vector<LaurentPoly>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly::constant(Variable::t, 1);
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  }
  // Fraction-free Bareiss elimination; every division is exact.
  LaurentPoly prev = LaurentPoly::constant(Variable::t, 1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!m[r][k].is_zero()) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return LaurentPoly(Variable::t);
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = algebra::divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = LaurentPoly(Variable::t);
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

LaurentPoly canonical_alexander(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const int lo = p.min_half_exponent();
  const int hi = p.max_half_exponent();
  // Center on exponent 0 (whole units, so the result stays integral).
  int shift = -(lo + hi) / 2;
  if (shift % 2 != 0) shift -= 1;
  LaurentPoly q = p.shifted_half(shift);
  algebra::Rational at_one = q.evaluate(1);
  int s = at_one.sign();
  if (s == 0) s = q.coefficient_half(q.max_half_exponent()) > 0 ? 1 : -1;
  return s < 0 ? -q : q;
}

LaurentPoly alexander(const PlanarDiagram& d) {
  if (d.components() != 1) throw Error(ErrorKind::NotAKnot, "Alexander polynomial is computed for knots");
  if (d.crossing_count() == 0) return LaurentPoly::constant(Variable::t, 1);
  return canonical_alexander(polynomial_determinant(alexander_matrix(d)));
}

}  // namespace symknot::jones
