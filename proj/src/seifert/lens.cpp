#include "symknot/seifert/lens.hpp"

#include <numeric>

#include "symknot/error.hpp"

namespace symknot::seifert {

namespace {

long long to_ll(const BigInt& x) {
  if (!x.fits_slong_p()) throw Error(ErrorKind::ResourceLimit, "lens parameter exceeds 64 bits");
  return x.get_si();
}

}  // namespace

LensParams lens(long long p, long long q) {
  if (p < 0) throw Error(ErrorKind::InvalidArgument, "lens space order must be non-negative");
  if (p == 0) {
    if (q != 1 && q != -1) throw Error(ErrorKind::InvalidArgument, "L(0,q) needs q = +-1");
    return {0, 1};
  }
  long long r = ((q % p) + p) % p;
  if (std::gcd(p, r) != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "L(" + std::to_string(p) + "," + std::to_string(q) + ") needs coprime parameters");
  }
  return {p, r};
}

std::string to_string(const LensParams& l) { return "L(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")"; }

std::optional<LensParams> lens_recognize(const SeifertInvariants& s) {
  if (!s.closed() || s.genus != 0) {
    throw Error(ErrorKind::Precondition, "lens recognition needs a closed fibration over the sphere");
  }
  const SeifertInvariants n = normalize(s);
  std::vector<Fiber> singular;
  long long carry = 0;
  for (const auto& f : n.fibers) {
    if (f.alpha > 1) singular.push_back(f);
    else carry += f.beta;
  }
  if (singular.size() > 2) return std::nullopt;
  while (singular.size() < 2) singular.push_back({1, 0});
  singular[0].beta += carry * singular[0].alpha;

  // Two fibered solid tori glued across T^2 x I. In the (section, fiber)
  // basis the meridians are m1 = (a1, b1) and m2 = (-a2, b2).
  const BigInt a1 = static_cast<long>(singular[0].alpha), b1 = static_cast<long>(singular[0].beta);
  const BigInt a2 = static_cast<long>(singular[1].alpha), b2 = static_cast<long>(singular[1].beta);
  // Longitude l1 = (u, v) with det(m1, l1) = a1 v - b1 u = 1.
  BigInt g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a1.get_mpz_t(), b1.get_mpz_t());
  const BigInt u = -y, v = x;
  // m2 = X m1 + Y l1.
  const BigInt Y = a1 * b2 + a2 * b1;
  const BigInt X = -a2 * v - b2 * u;
  if (Y == 0) return lens(0, 1);
  const long long p = to_ll(abs(Y));
  BigInt q = -X * sgn(Y);
  q %= BigInt(static_cast<long>(p));
  return lens(p, to_ll(q));
}

bool lens_homeomorphic(const LensParams& a, const LensParams& b, bool oriented) {
  const LensParams x = lens(a.p, a.q), y = lens(b.p, b.q);
  if (x.p != y.p) return false;
  if (x.p <= 2) return true;
  const long long p = x.p;
  auto mod = [p](__int128 v) { return static_cast<long long>(((v % p) + p) % p); };
  const long long prod = mod(static_cast<__int128>(x.q) * y.q);
  if (x.q == y.q || prod == 1) return true;
  if (oriented) return false;
  return mod(-static_cast<__int128>(x.q)) == y.q || prod == p - 1;
}

}  // namespace symknot::seifert
