#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "symknot/error.hpp"
#include "symknot/jones/jones.hpp"

namespace symknot::jones {

namespace {

using i128 = __int128;

algebra::BigInt to_big(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  algebra::BigInt hi = static_cast<unsigned long>(static_cast<uint64_t>(u >> 64));
  algebra::BigInt lo = static_cast<unsigned long>(static_cast<uint64_t>(u));
  algebra::BigInt r = (hi << 64) + lo;
  return neg ? algebra::BigInt(-r) : r;
}

// Dense Laurent polynomial in A: coefficient of A^(lo + i) at c[i].
struct Dense {
  int lo = 0;
  std::vector<i128> c;

  void add(const Dense& o, int shift, i128 scale) {
    if (o.c.empty()) return;
    int olo = o.lo + shift;
    if (c.empty()) {
      lo = olo;
      c.assign(o.c.size(), 0);
    }
    int new_lo = std::min(lo, olo);
    int new_hi = std::max(lo + static_cast<int>(c.size()), olo + static_cast<int>(o.c.size()));
    if (new_lo < lo || new_hi > lo + static_cast<int>(c.size())) {
      std::vector<i128> grown(new_hi - new_lo, 0);
      std::copy(c.begin(), c.end(), grown.begin() + (lo - new_lo));
      c = std::move(grown);
      lo = new_lo;
    }
    for (size_t i = 0; i < o.c.size(); ++i) c[olo - lo + i] += scale * o.c[i];
  }

  // Multiply by delta = -A^2 - A^-2.
  void times_delta() {
    if (c.empty()) return;
    std::vector<i128> r(c.size() + 4, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      r[i] -= c[i];
      r[i + 4] -= c[i];
    }
    c = std::move(r);
    lo -= 2;
  }
};

// Frontier state: for every label with exactly one processed end, the label at
// the other end of the partial strand through it. Stored as sorted pairs.
using Matching = std::vector<std::pair<int, int>>;

struct MatchingHash {
  size_t operator()(const Matching& m) const {
    size_t h = m.size();
    for (auto [a, b] : m) h = h * 1000003u ^ (static_cast<size_t>(a) * 31u + static_cast<size_t>(b));
    return h;
  }
};

// Applies one smoothing (two label pairs) to a matching. Returns the number
// of loops closed.
int apply(std::map<int, int>& partner, const std::array<std::pair<int, int>, 2>& pairs) {
  int loops = 0;
  for (auto [x, y] : pairs) {
    if (x == y) {
      // Both ends of one arc at this crossing, joined to each other.
      ++loops;
      continue;
    }
    auto px = partner.find(x);
    auto py = partner.find(y);
    if (px != partner.end() && py != partner.end()) {
      int p = px->second;
      int q = py->second;
      partner.erase(x);
      partner.erase(y);
      if (p == y) {
        ++loops;
      } else {
        partner[p] = q;
        partner[q] = p;
      }
    } else if (px != partner.end()) {
      int p = px->second;
      partner.erase(x);
      partner[p] = y;
      partner[y] = p;
    } else if (py != partner.end()) {
      int q = py->second;
      partner.erase(y);
      partner[q] = x;
      partner[x] = q;
    } else {
      partner[x] = y;
      partner[y] = x;
    }
  }
  return loops;
}

Matching encode(const std::map<int, int>& partner) {
  Matching m;
  for (auto [a, b] : partner) {
    if (a < b) m.emplace_back(a, b);
  }
  return m;
}

std::map<int, int> decode(const Matching& m) {
  std::map<int, int> partner;
  for (auto [a, b] : m) {
    partner[a] = b;
    partner[b] = a;
  }
  return partner;
}

std::vector<int> sweep_order(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  std::vector<char> used(n, 0);
  std::unordered_map<int, int> ends_seen;
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    int best_score = -100;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      // Labels closed off minus labels opened.
      int score = 0;
      std::map<int, int> local;
      for (int l : d.crossings()[c]) ++local[l];
      for (auto [l, k] : local) {
        int seen = ends_seen.count(l) ? ends_seen[l] : 0;
        score += (seen + k == 2) ? 1 : -1;
      }
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    used[best] = 1;
    order.push_back(best);
    for (int l : d.crossings()[best]) ++ends_seen[l];
  }
  return order;
}

}  // namespace

LaurentPoly kauffman_bracket(const PlanarDiagram& d, int max_crossings) {
  if (d.crossing_count() > max_crossings) {
    throw Error(ErrorKind::ResourceLimit, "bracket limited to " + std::to_string(max_crossings) +
                                              " crossings, diagram has " + std::to_string(d.crossing_count()));
  }
  std::unordered_map<Matching, Dense, MatchingHash> states;
  states[{}] = Dense{0, {1}};
  for (int c : sweep_order(d)) {
    const auto& x = d.crossings()[c];
    const std::array<std::pair<int, int>, 2> zero{{{x[0], x[1]}, {x[2], x[3]}}};
    const std::array<std::pair<int, int>, 2> one{{{x[0], x[3]}, {x[1], x[2]}}};
    std::unordered_map<Matching, Dense, MatchingHash> next;
    for (const auto& [m, poly] : states) {
      for (int s = 0; s < 2; ++s) {
        auto partner = decode(m);
        int loops = apply(partner, s == 0 ? zero : one);
        Dense term = poly;
        for (int k = 0; k < loops; ++k) term.times_delta();
        next[encode(partner)].add(term, s == 0 ? 1 : -1, 1);
      }
    }
    states = std::move(next);
  }
  if (states.size() != 1 || !states.begin()->first.empty()) {
    throw Error(ErrorKind::Integrity, "bracket sweep left open strands");
  }
  Dense total = states.begin()->second;
  for (int k = 0; k < d.free_loops(); ++k) total.times_delta();

  LaurentPoly p(algebra::Variable::A);
  for (size_t i = 0; i < total.c.size(); ++i) {
    if (total.c[i] != 0) p += LaurentPoly::monomial(algebra::Variable::A, to_big(total.c[i]), total.lo + static_cast<int>(i));
  }
  // Every state has at least one loop; remove one factor of delta.
  LaurentPoly delta = LaurentPoly::monomial(algebra::Variable::A, -1, 2) +
                      LaurentPoly::monomial(algebra::Variable::A, -1, -2);
  return algebra::divide_exact(p, delta);
}

}  // namespace symknot::jones
