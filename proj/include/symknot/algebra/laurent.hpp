#pragma once

#include <map>
#include <string>
#include <string_view>

#include "symknot/algebra/rational.hpp"

namespace symknot::algebra {

enum class Variable { t, q, A };

char variable_name(Variable v);

// Integer Laurent polynomial in one variable. Exponents are stored in half
// units (key k means exponent k/2) so that link Jones polynomials, which carry
// half-integer powers of t, share the representation with everything else.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  explicit LaurentPoly(Variable v = Variable::t) : var_(v) {}

  static LaurentPoly constant(Variable v, const BigInt& c);
  // c * v^e for an integer exponent e.
  static LaurentPoly monomial(Variable v, const BigInt& c, int e);
  // c * v^(h/2).
  static LaurentPoly half_monomial(Variable v, const BigInt& c, int h);

  Variable variable() const { return var_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // True when every exponent is an integer.
  bool integral_exponents() const;
  size_t size() const { return terms_.size(); }

  // Coefficient of v^(h/2).
  BigInt coefficient_half(int h) const;
  BigInt coefficient(int e) const { return coefficient_half(2 * e); }
  int min_half_exponent() const;
  int max_half_exponent() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly& scale(const BigInt& c);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // v -> v^-1
  LaurentPoly inverted() const;
  // v -> v^k, k != 0
  LaurentPoly substitute_power(int k) const;
  // Multiply by v^(h/2).
  LaurentPoly shifted_half(int h) const;
  LaurentPoly with_variable(Variable v) const;
  // Divide every exponent by k; throws unless all exponents are divisible.
  LaurentPoly exponents_divided(int k) const;

  // Exact value at an integer point. Requires integral exponents.
  Rational evaluate(long long x) const;

  // Canonical text: "c0*t^(e0) + c1*t^(e1) + ..." with increasing exponents,
  // exponents written as reduced fractions. The zero polynomial is "0".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(int h, const BigInt& c);

  Variable var_;
  Terms terms_;
};

// Quotient a / b over the integers; throws unless b divides a exactly.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace symknot::algebra
