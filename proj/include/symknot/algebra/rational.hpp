#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace symknot::algebra {

using BigInt = mpz_class;

// Exact rational number. Values whose numerator and denominator fit in 64 bits
// stay on an inline fast path; anything larger is promoted to a GMP rational.
// Always normalized: den > 0, gcd(num, den) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT(implicit)
  Rational(long long n, long long d);
  explicit Rational(const BigInt& n);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept = default;
  ~Rational() = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_unit() const { return !big_ && den_ == 1 && (num_ == 1 || num_ == -1); }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  BigInt numerator() const;
  BigInt denominator() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  void set_big(mpq_class q);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace symknot::algebra
