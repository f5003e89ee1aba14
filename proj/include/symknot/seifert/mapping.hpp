#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "symknot/algebra/rational.hpp"

namespace symknot::seifert {

using algebra::BigInt;

// [[a, b], [c, d]] acting on column vectors in a basis (s, f).
struct IntMatrix2 {
  BigInt a = 1, b = 0, c = 0, d = 1;

  static IntMatrix2 identity() { return {}; }
  BigInt determinant() const { return a * d - b * c; }
  BigInt trace() const { return a + d; }
  bool is_plus_minus_identity() const;
  std::pair<BigInt, BigInt> apply(const BigInt& x, const BigInt& y) const;
  // Requires determinant +-1.
  IntMatrix2 inverse() const;
  IntMatrix2 power(int n) const;
  std::string to_string() const;

  friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y);
  friend bool operator==(const IntMatrix2& x, const IntMatrix2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// Torus gluings of the two halves of the filled double: phi for +1 filling
// (s -> s' + f', f -> -f'), psi for -1 filling (s -> s' - f', f -> -f').
IntMatrix2 gluing_phi();
IntMatrix2 gluing_psi();

// Candidate symmetry preserving both halves: [[a, 2], [-(a+1)^2/2, -(a+2)]].
IntMatrix2 h_candidate(long long a);
// Candidate exchanging the halves: [[a, -2], [(a-1)^2/2 - 1, 2 - a]].
IntMatrix2 h_exchange_candidate(long long a);
// Composite after the annulus twist: [[1-2a, 4], [-(a-1)^2, 2a-3]].
IntMatrix2 f_candidate(long long a);

// Closed forms for the n-th powers.
IntMatrix2 h_power_closed_form(long long a, int n);
IntMatrix2 f_power_closed_form(long long a, int n);

struct PowerFormulaReport {
  long long a = 0;
  int n_max = 0;
  // Powers where the iterated product and the closed form disagree.
  std::vector<int> h_mismatches;
  std::vector<int> f_mismatches;
  // Powers equal to +-Id.
  std::vector<int> h_finite;
  std::vector<int> f_finite;
  bool determinants_ok = false;
  // h fixes (2, -(a+1)) up to sign and psi h phi^-1 fixes its reflection;
  // the exchange candidate swaps the two rational longitudes as required.
  bool gluing_relations_ok = false;

  bool passed() const {
    return h_mismatches.empty() && f_mismatches.empty() && h_finite.empty() && f_finite.empty() &&
           determinants_ok && gluing_relations_ok;
  }
  nlohmann::json to_json() const;
};

// Throws Precondition unless a is odd (needed for (a+1)^2/2 and (a-1)^2/2).
PowerFormulaReport verify_power_formulas(long long a, int n_max);

struct SlopeCounterexample {
  IntMatrix2 matrix;
  std::pair<long long, long long> slope1, slope2;
};

struct SlopeReport {
  int bound = 0;
  long long matrices = 0;
  long long slopes = 0;
  // Matrices fixing at least two distinct slopes up to sign.
  long long multi_fixing = 0;
  std::vector<SlopeCounterexample> counterexamples;

  bool passed() const { return counterexamples.empty(); }
  nlohmann::json to_json() const;
};

// All SL_2(Z) matrices with entries in [-bound, bound] against all primitive
// slopes with |p|, |q| <= bound.
SlopeReport slope_fix_classify(int bound);

}  // namespace symknot::seifert
