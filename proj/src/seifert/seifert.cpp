#include "symknot/seifert/seifert.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "symknot/error.hpp"

namespace symknot::seifert {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long long integer() {
    size_t start = pos_;
    if (peek('-') || peek('+')) ++pos_;
    size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    try {
      return std::stoll(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }
  bool done() const { return pos_ == s_.size(); }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::MalformedSyntax,
                "bad Seifert symbol '" + s_ + "' at position " + std::to_string(pos_) + ": " + why);
  }

 private:
  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

void SeifertInvariants::validate() const {
  if (boundary < 0) throw Error(ErrorKind::InvalidArgument, "boundary count must be non-negative");
  for (const auto& f : fibers) {
    if (f.alpha <= 0) throw Error(ErrorKind::InvalidArgument, "fiber multiplicity must be positive");
    if (std::gcd(f.alpha, f.beta) != 1) {
      throw Error(ErrorKind::InvalidArgument, "fiber (" + std::to_string(f.alpha) + "," + std::to_string(f.beta) +
                                                  ") is not a coprime pair");
    }
  }
}

SeifertInvariants parse_seifert(std::string_view text) {
  Cursor in(text);
  SeifertInvariants s;
  in.expect('S');
  in.expect('(');
  s.genus = static_cast<int>(in.integer());
  in.expect(',');
  s.boundary = static_cast<int>(in.integer());
  if (in.accept(';') || in.accept(':')) {
    do {
      in.expect('(');
      Fiber f;
      f.alpha = in.integer();
      in.expect(',');
      f.beta = in.integer();
      in.expect(')');
      s.fibers.push_back(f);
    } while (in.accept(','));
  }
  in.expect(')');
  if (!in.done()) in.fail("trailing characters");
  s.validate();
  return s;
}

std::string to_string(const SeifertInvariants& s) {
  std::ostringstream out;
  out << "S(" << s.genus << ',' << s.boundary;
  for (size_t i = 0; i < s.fibers.size(); ++i) {
    out << (i ? "," : ";") << '(' << s.fibers[i].alpha << ',' << s.fibers[i].beta << ')';
  }
  out << ')';
  return out.str();
}

Rational euler_number(const SeifertInvariants& s) {
  Rational e;
  for (const auto& f : s.fibers) e += Rational(f.beta, f.alpha);
  return e;
}

SeifertInvariants orientation_reversed(const SeifertInvariants& s) {
  SeifertInvariants out = s;
  for (auto& f : out.fibers) f.beta = -f.beta;
  return out;
}

SeifertInvariants normalize(const SeifertInvariants& s) {
  s.validate();
  SeifertInvariants out;
  out.genus = s.genus;
  out.boundary = s.boundary;
  long long carry = 0;
  for (const auto& f : s.fibers) {
    const long long k = floor_div(f.beta, f.alpha);
    carry += k;
    if (f.alpha > 1) out.fibers.push_back({f.alpha, f.beta - k * f.alpha});
  }
  std::sort(out.fibers.begin(), out.fibers.end());
  if (s.closed()) out.fibers.push_back({1, carry});
  return out;
}

bool fibrations_isomorphic(const SeifertInvariants& a, const SeifertInvariants& b) {
  if (a.genus != b.genus || a.boundary != b.boundary) return false;
  return normalize(a) == normalize(b);
}

SeifertInvariants move_transfer(const SeifertInvariants& s, size_t i, size_t j, long long k) {
  if (i == j || i >= s.fibers.size() || j >= s.fibers.size()) {
    throw Error(ErrorKind::InvalidArgument, "transfer move needs two distinct fibers");
  }
  SeifertInvariants out = s;
  out.fibers[i].beta += k * out.fibers[i].alpha;
  out.fibers[j].beta -= k * out.fibers[j].alpha;
  return out;
}

SeifertInvariants move_add_regular(const SeifertInvariants& s) {
  SeifertInvariants out = s;
  out.fibers.push_back({1, 0});
  return out;
}

SeifertInvariants move_shift(const SeifertInvariants& s, size_t i, long long k) {
  if (s.closed()) throw Error(ErrorKind::Precondition, "shift move needs a boundary component");
  if (i >= s.fibers.size()) throw Error(ErrorKind::InvalidArgument, "fiber index out of range");
  SeifertInvariants out = s;
  out.fibers[i].beta += k * out.fibers[i].alpha;
  return out;
}

std::vector<std::vector<BigInt>> h1_presentation(const SeifertInvariants& s) {
  if (!s.closed()) throw Error(ErrorKind::Precondition, "first homology order needs a closed fibration");
  const size_t k = s.fibers.size();
  const size_t crosscaps = s.genus < 0 ? static_cast<size_t>(-s.genus) : 0;
  const size_t cols = k + crosscaps + 1;
  const size_t h = cols - 1;
  std::vector<std::vector<BigInt>> rows;
  for (size_t i = 0; i < k; ++i) {
    std::vector<BigInt> r(cols, 0);
    r[i] = BigInt(static_cast<long>(s.fibers[i].alpha));
    r[h] = BigInt(static_cast<long>(s.fibers[i].beta));
    rows.push_back(std::move(r));
  }
  std::vector<BigInt> section(cols, 0);
  for (size_t i = 0; i < k; ++i) section[i] = 1;
  for (size_t j = 0; j < crosscaps; ++j) section[k + j] = 2;
  rows.push_back(std::move(section));
  // Each crosscap conjugates h to its inverse.
  for (size_t j = 0; j < crosscaps; ++j) {
    std::vector<BigInt> r(cols, 0);
    r[h] = 2;
    rows.push_back(std::move(r));
  }
  return rows;
}

BigInt abelian_group_order(std::vector<std::vector<BigInt>> m, size_t cols) {
  size_t r = 0;
  for (size_t col = 0; col < cols && r < m.size(); ++col) {
    while (true) {
      size_t pivot = m.size();
      for (size_t i = r; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        if (pivot == m.size() || abs(m[i][col]) < abs(m[pivot][col])) pivot = i;
      }
      if (pivot == m.size()) break;
      std::swap(m[r], m[pivot]);
      bool clean = true;
      for (size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        BigInt f;
        mpz_fdiv_q(f.get_mpz_t(), m[i][col].get_mpz_t(), m[r][col].get_mpz_t());
        for (size_t c = col; c < cols; ++c) m[i][c] -= f * m[r][c];
        if (m[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < m.size() && m[r][col] != 0) ++r;
    else return 0;
  }
  if (r < cols) return 0;
  BigInt order = 1;
  for (size_t i = 0; i < cols; ++i) order *= m[i][i];
  return abs(order);
}

BigInt h1_order(const SeifertInvariants& s) {
  s.validate();
  if (!s.closed()) throw Error(ErrorKind::Precondition, "first homology order needs a closed fibration");
  if (s.genus > 0) return 0;
  const auto rows = h1_presentation(s);
  return abelian_group_order(rows, rows.front().size());
}

}  // namespace symknot::seifert
