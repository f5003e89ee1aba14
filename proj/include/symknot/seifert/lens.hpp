#pragma once

#include <optional>
#include <string>

#include "symknot/seifert/seifert.hpp"

namespace symknot::seifert {

// L(p, q). L(1, 0) is S^3 and L(0, 1) is S^2 x S^1.
struct LensParams {
  long long p = 1;
  long long q = 0;
  friend bool operator==(const LensParams& a, const LensParams& b) { return a.p == b.p && a.q == b.q; }
};

// Reduces q into [0, p) and checks gcd(p, q) = 1.
LensParams lens(long long p, long long q);
std::string to_string(const LensParams& l);

// Closed genus-0 fibrations with at most two singular fibers. Orientation is
// fixed so that S(0,0;(q,p),(q,-p),(1,1)) is L(q^2, 1+qs) with ps + qr = 1.
std::optional<LensParams> lens_recognize(const SeifertInvariants& s);

bool lens_homeomorphic(const LensParams& a, const LensParams& b, bool oriented);

}  // namespace symknot::seifert
