#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symknot/algebra/rational.hpp"

namespace symknot::seifert {

using algebra::BigInt;
using algebra::Rational;

struct Fiber {
  long long alpha = 1;
  long long beta = 0;
  friend bool operator==(const Fiber& a, const Fiber& b) { return a.alpha == b.alpha && a.beta == b.beta; }
  friend bool operator<(const Fiber& a, const Fiber& b) {
    return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
  }
};

// S(g, n; (a1,b1), ...). Negative g is a non-orientable base with |g|
// crosscaps.
struct SeifertInvariants {
  int genus = 0;
  int boundary = 0;
  std::vector<Fiber> fibers;

  // alpha > 0, gcd(alpha, beta) = 1, boundary >= 0.
  void validate() const;
  bool closed() const { return boundary == 0; }
  friend bool operator==(const SeifertInvariants& a, const SeifertInvariants& b) {
    return a.genus == b.genus && a.boundary == b.boundary && a.fibers == b.fibers;
  }
};

// Accepts "S(0,0;(3,2),(3,-2))", ':' in place of ';', and no fibers ("S(0,1)").
SeifertInvariants parse_seifert(std::string_view text);
std::string to_string(const SeifertInvariants& s);

Rational euler_number(const SeifertInvariants& s);

// Negates every beta.
SeifertInvariants orientation_reversed(const SeifertInvariants& s);

// Bounded: 0 <= beta < alpha on every fiber, (1,0) fibers dropped.
// Closed: the same on every fiber with alpha > 1, the integer remainder carried
// by one trailing (1,b) fiber. Fibers are sorted.
SeifertInvariants normalize(const SeifertInvariants& s);

bool fibrations_isomorphic(const SeifertInvariants& a, const SeifertInvariants& b);

// The three isomorphism moves. move_shift is invalid on closed fibrations.
SeifertInvariants move_transfer(const SeifertInvariants& s, size_t i, size_t j, long long k = 1);
SeifertInvariants move_add_regular(const SeifertInvariants& s);
SeifertInvariants move_shift(const SeifertInvariants& s, size_t i, long long k = 1);

// Order of H_1 of a closed fibration from its abelianized presentation;
// 0 means infinite.
BigInt h1_order(const SeifertInvariants& s);

// Relation matrix of that presentation. Columns: fibers c_i, then crosscap
// generators v_j (non-orientable base) and finally the regular fiber h.
// Orientable bases with g > 0 contribute free generators and are not included.
std::vector<std::vector<BigInt>> h1_presentation(const SeifertInvariants& s);

// Order of Z^cols / rowspace; 0 if the quotient is infinite.
BigInt abelian_group_order(std::vector<std::vector<BigInt>> relations, size_t cols);

}  // namespace symknot::seifert
