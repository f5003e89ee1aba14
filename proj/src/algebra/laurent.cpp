#include "symknot/algebra/laurent.hpp"

#include <cctype>
#include <optional>

#include "symknot/error.hpp"

namespace symknot::algebra {

char variable_name(Variable v) {
  switch (v) {
    case Variable::t: return 't';
    case Variable::q: return 'q';
    case Variable::A: return 'A';
  }
  return '?';
}

namespace {

void require_same(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.variable() != b.variable()) {
    throw Error(ErrorKind::VariableMismatch,
                std::string("Laurent polynomial variable mismatch: ") + variable_name(a.variable()) +
                    " vs " + variable_name(b.variable()));
  }
}

}  // namespace

LaurentPoly LaurentPoly::constant(Variable v, const BigInt& c) { return half_monomial(v, c, 0); }

LaurentPoly LaurentPoly::monomial(Variable v, const BigInt& c, int e) {
  return half_monomial(v, c, 2 * e);
}

LaurentPoly LaurentPoly::half_monomial(Variable v, const BigInt& c, int h) {
  LaurentPoly p(v);
  p.add_term(h, c);
  return p;
}

void LaurentPoly::add_term(int h, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(h, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::integral_exponents() const {
  for (const auto& [h, c] : terms_) {
    if (h % 2 != 0) return false;
  }
  return true;
}

BigInt LaurentPoly::coefficient_half(int h) const {
  auto it = terms_.find(h);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_half_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no degree");
  return terms_.begin()->first;
}

int LaurentPoly::max_half_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no degree");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_);
  for (const auto& [h, c] : terms_) r.terms_.emplace(h, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same(*this, o);
  for (const auto& [h, c] : o.terms_) add_term(h, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same(*this, o);
  for (const auto& [h, c] : o.terms_) add_term(h, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  require_same(*this, o);
  LaurentPoly r(var_);
  for (const auto& [h1, c1] : terms_) {
    for (const auto& [h2, c2] : o.terms_) r.add_term(h1 + h2, c1 * c2);
  }
  terms_ = std::move(r.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::scale(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [h, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::inverted() const { return substitute_power(-1); }

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "substitution exponent must be nonzero");
  LaurentPoly r(var_);
  for (const auto& [h, c] : terms_) r.terms_.emplace(h * k, c);
  return r;
}

LaurentPoly LaurentPoly::shifted_half(int h) const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + h, c);
  return r;
}

LaurentPoly LaurentPoly::with_variable(Variable v) const {
  LaurentPoly r(*this);
  r.var_ = v;
  return r;
}

LaurentPoly LaurentPoly::exponents_divided(int k) const {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "division of exponents by zero");
  LaurentPoly r(var_);
  for (const auto& [h, c] : terms_) {
    if (h % k != 0) throw Error(ErrorKind::Integrity, "exponent not divisible during rescaling");
    r.terms_.emplace(h / k, c);
  }
  return r;
}

Rational LaurentPoly::evaluate(long long x) const {
  if (!integral_exponents()) {
    throw Error(ErrorKind::InvalidArgument, "cannot evaluate a polynomial with half-integer exponents");
  }
  mpq_class sum = 0;
  for (const auto& [h, c] : terms_) {
    int e = h / 2;
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), mpz_class(static_cast<long>(x)).get_mpz_t(),
               static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) {
      sum += mpq_class(c * p);
    } else {
      if (p == 0) throw Error(ErrorKind::InvalidArgument, "evaluation of negative power at zero");
      mpq_class term(c, p);
      term.canonicalize();
      sum += term;
    }
  }
  return Rational(sum);
}

namespace {

std::string exponent_text(int h) {
  if (h % 2 == 0) return std::to_string(h / 2);
  return std::to_string(h) + "/2";
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const char v = variable_name(var_);
  bool first = true;
  for (const auto& [h, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.get_str();
    out += '*';
    out += v;
    out += "^(";
    out += exponent_text(h);
    out += ')';
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::MalformedSyntax, "bad polynomial text '" + std::string(text) + "': " + why);
  };
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s == "0") return LaurentPoly(Variable::t);
  if (s.empty()) throw fail("empty");

  std::optional<Variable> var;
  LaurentPoly out(Variable::t);
  size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    if (!first) {
      if (s[pos] != '+') throw fail("expected '+'");
      ++pos;
    }
    first = false;
    size_t star = s.find('*', pos);
    if (star == std::string::npos) throw fail("missing '*'");
    BigInt c;
    if (c.set_str(s.substr(pos, star - pos), 10) != 0) throw fail("bad coefficient");
    pos = star + 1;
    if (pos >= s.size()) throw fail("missing variable");
    Variable v;
    switch (s[pos]) {
      case 't': v = Variable::t; break;
      case 'q': v = Variable::q; break;
      case 'A': v = Variable::A; break;
      default: throw fail("unknown variable");
    }
    if (var && *var != v) throw fail("mixed variables");
    var = v;
    ++pos;
    if (s.compare(pos, 2, "^(") != 0) throw fail("expected '^('");
    pos += 2;
    size_t close = s.find(')', pos);
    if (close == std::string::npos) throw fail("missing ')'");
    std::string e = s.substr(pos, close - pos);
    pos = close + 1;
    int h;
    try {
      size_t slash = e.find('/');
      if (slash == std::string::npos) {
        h = 2 * std::stoi(e);
      } else {
        if (e.substr(slash + 1) != "2") throw fail("exponent denominator must be 2");
        h = std::stoi(e.substr(0, slash));
        if (h % 2 == 0) throw fail("exponent fraction not reduced");
      }
    } catch (const std::logic_error&) {
      throw fail("bad exponent");
    }
    out.add_term(h, c);
  }
  if (var) out.var_ = *var;
  return out;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.variable() != b.variable()) {
    throw Error(ErrorKind::VariableMismatch, "division of polynomials in different variables");
  }
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  const int b_top = b.max_half_exponent();
  const int b_span = b_top - b.min_half_exponent();
  const BigInt b_lead = b.coefficient_half(b_top);
  LaurentPoly q(a.variable());
  LaurentPoly r = a;
  while (!r.is_zero()) {
    const int top = r.max_half_exponent();
    if (top - r.min_half_exponent() < b_span) break;
    const BigInt lead = r.coefficient_half(top);
    if (lead % b_lead != 0) break;
    LaurentPoly term = LaurentPoly::half_monomial(a.variable(), lead / b_lead, top - b_top);
    q += term;
    r -= term * b;
  }
  if (!r.is_zero()) throw Error(ErrorKind::Integrity, "polynomial division is not exact");
  return q;
}

}  // namespace symknot::algebra
