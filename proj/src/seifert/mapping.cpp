#include "symknot/seifert/mapping.hpp"

#include <numeric>
#include <sstream>

#include "symknot/error.hpp"

namespace symknot::seifert {

namespace {

BigInt big(long long x) { return BigInt(static_cast<long>(x)); }

BigInt sign_power(int n) { return n % 2 ? -1 : 1; }

nlohmann::json matrix_json(const IntMatrix2& m) {
  using nlohmann::json;
  return json::array({json::array({m.a.get_str(), m.b.get_str()}), json::array({m.c.get_str(), m.d.get_str()})});
}

}  // namespace

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

bool IntMatrix2::is_plus_minus_identity() const {
  return b == 0 && c == 0 && a == d && (a == 1 || a == -1);
}

std::pair<BigInt, BigInt> IntMatrix2::apply(const BigInt& x, const BigInt& y) const {
  return {a * x + b * y, c * x + d * y};
}

IntMatrix2 IntMatrix2::inverse() const {
  const BigInt det = determinant();
  if (det != 1 && det != -1) throw Error(ErrorKind::Precondition, "matrix is not invertible over the integers");
  return {d * det, -b * det, -c * det, a * det};
}

IntMatrix2 IntMatrix2::power(int n) const {
  IntMatrix2 base = n < 0 ? inverse() : *this;
  IntMatrix2 out;
  for (int e = n < 0 ? -n : n; e > 0; e >>= 1) {
    if (e & 1) out = out * base;
    base = base * base;
  }
  return out;
}

std::string IntMatrix2::to_string() const {
  std::ostringstream out;
  out << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
  return out.str();
}

IntMatrix2 gluing_phi() { return {1, 0, 1, -1}; }
IntMatrix2 gluing_psi() { return {1, 0, -1, -1}; }

IntMatrix2 h_candidate(long long a) {
  const BigInt A = big(a);
  return {A, 2, -(A + 1) * (A + 1) / 2, -(A + 2)};
}

IntMatrix2 h_exchange_candidate(long long a) {
  const BigInt A = big(a);
  return {A, -2, (A - 1) * (A - 1) / 2 - 1, 2 - A};
}

IntMatrix2 f_candidate(long long a) {
  const BigInt A = big(a);
  return {1 - 2 * A, 4, -(A - 1) * (A - 1), 2 * A - 3};
}

IntMatrix2 h_power_closed_form(long long a, int n) {
  const BigInt A = big(a), N = big(n);
  const BigInt s = sign_power(n);
  return {-s * (N * A + N - 1), -s * 2 * N, s * N * (A + 1) * (A + 1) / 2, s * (N * A + N + 1)};
}

IntMatrix2 f_power_closed_form(long long a, int n) {
  const BigInt A = big(a), N = big(n);
  const BigInt s = sign_power(n);
  return {s * (2 * N * A - (2 * N - 1)), -s * 4 * N, s * N * (A - 1) * (A - 1), -s * (2 * N * A - (2 * N + 1))};
}

PowerFormulaReport verify_power_formulas(long long a, int n_max) {
  if (a % 2 == 0) {
    throw Error(ErrorKind::Precondition, "power formulas need odd a so that (a+-1)^2/2 is an integer");
  }
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be positive");
  PowerFormulaReport r;
  r.a = a;
  r.n_max = n_max;
  const IntMatrix2 h = h_candidate(a), f = f_candidate(a), hx = h_exchange_candidate(a);
  r.determinants_ok = h.determinant() == 1 && f.determinant() == 1 && hx.determinant() == -1;

  IntMatrix2 hp, fp;
  for (int n = 1; n <= n_max; ++n) {
    hp = hp * h;
    fp = fp * f;
    if (hp != h_power_closed_form(a, n)) r.h_mismatches.push_back(n);
    if (fp != f_power_closed_form(a, n)) r.f_mismatches.push_back(n);
    if (hp.is_plus_minus_identity()) r.h_finite.push_back(n);
    if (fp.is_plus_minus_identity()) r.f_finite.push_back(n);
  }

  const IntMatrix2 phi = gluing_phi(), psi = gluing_psi();
  const IntMatrix2 phi_inv = phi.inverse();
  const BigInt A = big(a);
  using V = std::pair<BigInt, BigInt>;
  // Rational longitude (p, q) of one half; the other half sees (-p, q).
  const V lh{2, -(A + 1)};
  const bool h_ok = h.apply(lh.first, lh.second) == V{-lh.first, -lh.second} &&
                    (psi * h * phi_inv).apply(-lh.first, lh.second) == V{-lh.first, lh.second};
  const V lx{2, A - 1};
  const bool hx_ok = (psi * hx).apply(lx.first, lx.second) == V{lx.first, -lx.second} &&
                     (hx * phi_inv).apply(-lx.first, lx.second) == lx;
  r.gluing_relations_ok = h_ok && hx_ok;
  return r;
}

nlohmann::json PowerFormulaReport::to_json() const {
  return {{"a", a},
          {"n_max", n_max},
          {"h", matrix_json(h_candidate(a))},
          {"h_exchange", matrix_json(h_exchange_candidate(a))},
          {"f", matrix_json(f_candidate(a))},
          {"h_mismatches", h_mismatches},
          {"f_mismatches", f_mismatches},
          {"h_finite_powers", h_finite},
          {"f_finite_powers", f_finite},
          {"determinants_ok", determinants_ok},
          {"gluing_relations_ok", gluing_relations_ok},
          {"passed", passed()}};
}

SlopeReport slope_fix_classify(int bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "slope bound must be at least 1");
  SlopeReport r;
  r.bound = bound;
  std::vector<std::pair<long long, long long>> slopes;
  for (long long p = -bound; p <= bound; ++p) {
    for (long long q = 0; q <= bound; ++q) {
      if (std::gcd(p, q) != 1) continue;
      if (q == 0 && p != 1) continue;
      slopes.push_back({p, q});
    }
  }
  r.slopes = static_cast<long long>(slopes.size());

  for (long long a = -bound; a <= bound; ++a) {
    for (long long b = -bound; b <= bound; ++b) {
      for (long long c = -bound; c <= bound; ++c) {
        for (long long d = -bound; d <= bound; ++d) {
          if (a * d - b * c != 1) continue;
          ++r.matrices;
          std::vector<std::pair<long long, long long>> fixed;
          for (const auto& [p, q] : slopes) {
            const long long x = a * p + b * q, y = c * p + d * q;
            if ((x == p && y == q) || (x == -p && y == -q)) fixed.push_back({p, q});
          }
          if (fixed.size() < 2) continue;
          ++r.multi_fixing;
          const IntMatrix2 m{big(a), big(b), big(c), big(d)};
          if (!m.is_plus_minus_identity()) r.counterexamples.push_back({m, fixed[0], fixed[1]});
        }
      }
    }
  }
  return r;
}

nlohmann::json SlopeReport::to_json() const {
  nlohmann::json ce = nlohmann::json::array();
  for (const auto& c : counterexamples) {
    ce.push_back({{"matrix", matrix_json(c.matrix)},
                  {"slopes", nlohmann::json::array({nlohmann::json::array({c.slope1.first, c.slope1.second}),
                                                    nlohmann::json::array({c.slope2.first, c.slope2.second})})}});
  }
  return {{"bound", bound},   {"matrices", matrices},  {"slopes", slopes},
          {"multi_fixing", multi_fixing}, {"counterexamples", ce}, {"passed", passed()}};
}

}  // namespace symknot::seifert
