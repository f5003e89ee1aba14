#include "symknot/algebra/rational.hpp"

#include <numeric>

#include "symknot/error.hpp"

namespace symknot {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VariableMismatch: return "variable_mismatch";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::MalformedSyntax: return "malformed_syntax";
    case ErrorKind::ArcMultiplicity: return "arc_multiplicity";
    case ErrorKind::Orientation: return "orientation";
    case ErrorKind::SplitDiagram: return "split_diagram";
    case ErrorKind::NotAKnot: return "not_a_knot";
    case ErrorKind::ResourceLimit: return "resource_limit";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Integrity: return "integrity";
  }
  return "unknown";
}

}  // namespace symknot

namespace symknot::algebra {

namespace {

using i128 = __int128;

bool fits64(i128 v) {
  return v >= static_cast<i128>(INT64_MIN) && v <= static_cast<i128>(INT64_MAX);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

mpz_class to_mpz64(int64_t v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  i128 g = gcd128(nn, dd);
  if (g > 1) {
    nn /= g;
    dd /= g;
  }
  if (fits64(nn) && fits64(dd)) {
    num_ = static_cast<int64_t>(nn);
    den_ = static_cast<int64_t>(dd);
  } else {
    set_big(mpq_class(to_mpz(nn), to_mpz(dd)));
  }
}

Rational::Rational(const BigInt& n) {
  if (n.fits_slong_p()) {
    num_ = n.get_si();
  } else {
    set_big(mpq_class(n));
  }
}

Rational::Rational(const mpq_class& q) { set_big(q); }

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_) {
    big_ = std::make_unique<mpq_class>(*o.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::set_big(mpq_class q) {
  q.canonicalize();
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz64(num_), to_mpz64(den_));
}

BigInt Rational::numerator() const { return big_ ? BigInt(big_->get_num()) : to_mpz64(num_); }
BigInt Rational::denominator() const { return big_ ? BigInt(big_->get_den()) : to_mpz64(den_); }

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (!big_ && num_ != INT64_MIN) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return Rational(mpq_class(-to_mpq()));
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      int64_t s;
      if (!__builtin_add_overflow(num_, o.num_, &s)) {
        num_ = s;
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
    i128 d = static_cast<i128>(den_) * o.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (fits64(n) && fits64(d)) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
      return *this;
    }
    set_big(mpq_class(to_mpz(n), to_mpz(d)));
    return *this;
  }
  set_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      int64_t p;
      if (!__builtin_mul_overflow(num_, o.num_, &p)) {
        num_ = p;
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * o.num_;
    i128 d = static_cast<i128>(den_) * o.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (fits64(n) && fits64(d)) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
      return *this;
    }
    set_big(mpq_class(to_mpz(n), to_mpz(d)));
    return *this;
  }
  set_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero rational");
  if (!big_ && !o.big_) {
    i128 n = static_cast<i128>(num_) * o.den_;
    i128 d = static_cast<i128>(den_) * o.num_;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (fits64(n) && fits64(d)) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
      return *this;
    }
    set_big(mpq_class(to_mpz(n), to_mpz(d)));
    return *this;
  }
  set_big(to_mpq() / o.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  // Normalization keeps representable values on the small path, so a mixed
  // comparison is only equal if both are big.
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace symknot::algebra
