#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "symknot/diagram/morse.hpp"
#include "symknot/diagram/pd_io.hpp"
#include "symknot/error.hpp"
#include "symknot/symunion/symmetric_union.hpp"

#ifndef SYMKNOT_FIXTURE_DIR
#define SYMKNOT_FIXTURE_DIR "fixtures"
#endif

namespace support {

using symknot::Error;
using symknot::algebra::Variable;
using symknot::diagram::CrossingType;
using symknot::diagram::MorseBuilder;
using symknot::diagram::Splitting;

std::string fixture_path(const std::string& name) { return std::string(SYMKNOT_FIXTURE_DIR) + "/" + name; }

PlanarDiagram fixture_pd(const std::string& name) { return symknot::diagram::read_pd_file(fixture_path(name)); }

PlanarDiagram trefoil_left() {
  return symknot::diagram::parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
}

PlanarDiagram trefoil_right() { return symknot::diagram::mirror(trefoil_left()); }

PlanarDiagram figure_eight() {
  return symknot::diagram::parse_pd("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]");
}

PlanarDiagram hopf_link() { return symknot::diagram::parse_pd("PD[X[4,1,3,2],X[2,3,1,4]]"); }

namespace {

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

CrossingType random_type(Rng& rng) {
  return pick(rng, 0, 1) ? CrossingType::UnderRising : CrossingType::UnderFalling;
}

// Movie with about `target` crossings that ends at `final_width` strands.
void random_movie(Rng& rng, MorseBuilder& m, int target, int final_width, int max_width) {
  int crossings = 0;
  while (crossings < target) {
    const int w = m.width();
    if (w < 2) {
      m.cup(pick(rng, 0, w));
      continue;
    }
    int r = pick(rng, 0, 9);
    if (r < 2 && w + 2 <= max_width) {
      m.cup(pick(rng, 0, w));
    } else if (r < 3 && w > std::max(2, final_width)) {
      m.cap(pick(rng, 0, w - 2));
    } else {
      m.cross(pick(rng, 0, w - 2), random_type(rng));
      ++crossings;
    }
  }
  while (m.width() > final_width) m.cap(pick(rng, 0, m.width() - 2));
  while (m.width() < final_width) m.cup(pick(rng, 0, m.width()));
}

}  // namespace

PlanarDiagram random_diagram(Rng& rng, int max_crossings, bool links) {
  for (;;) {
    MorseBuilder m;
    random_movie(rng, m, pick(rng, 1, max_crossings), 0, 8);
    PlanarDiagram d = m.close(Splitting::Allow);
    if (d.is_split() || d.crossing_count() == 0) continue;
    if (!links && d.components() != 1) continue;
    return d;
  }
}

PlanarDiagram random_knot(Rng& rng, int max_crossings) { return random_diagram(rng, max_crossings, false); }

PlanarDiagram random_braid_knot(Rng& rng, int strands, int length) {
  for (;;) {
    std::vector<int> word;
    for (int i = 0; i < length; ++i) {
      int g = pick(rng, 1, strands - 1);
      word.push_back(pick(rng, 0, 1) ? g : -g);
    }
    PlanarDiagram d = symknot::diagram::braid_closure(strands, word, Splitting::Allow);
    if (!d.is_split() && d.components() == 1) return d;
  }
}

TangleCode random_half(Rng& rng, int slots, int max_crossings, int min_crossings) {
  for (;;) {
    MorseBuilder m;
    random_movie(rng, m, pick(rng, min_crossings, max_crossings), 2 * slots + 2, 2 * slots + 4);
    try {
      TangleCode t = m.to_tangle(slots);
      symknot::symunion::partial_knot(t);
      return t;
    } catch (const Error&) {
      continue;
    }
  }
}

LaurentPoly naive_bracket(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  std::map<int, int> index;
  for (int l : d.arcs()) index.emplace(l, static_cast<int>(index.size()));
  const LaurentPoly delta = LaurentPoly::monomial(Variable::A, -1, 2) + LaurentPoly::monomial(Variable::A, -1, -2);
  std::vector<LaurentPoly> delta_pow{LaurentPoly::constant(Variable::A, 1)};
  LaurentPoly total(Variable::A);
  for (uint64_t state = 0; state < (uint64_t{1} << n); ++state) {
    std::vector<int> parent(index.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int a = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = d.crossings()[c];
      auto unite = [&](int p, int q) { parent[find(index[p])] = find(index[q]); };
      if ((state >> c) & 1) {
        unite(x[0], x[3]);
        unite(x[1], x[2]);
        --a;
      } else {
        unite(x[0], x[1]);
        unite(x[2], x[3]);
        ++a;
      }
    }
    int loops = d.free_loops();
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) loops += find(i) == i ? 1 : 0;
    while (static_cast<int>(delta_pow.size()) < loops) delta_pow.push_back(delta_pow.back() * delta);
    total += LaurentPoly::monomial(Variable::A, 1, a) * delta_pow[loops - 1];
  }
  return total;
}

LaurentPoly laplace_determinant(const std::vector<std::vector<LaurentPoly>>& m) {
  const size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(Variable::t, 1);
  if (n == 1) return m[0][0];
  LaurentPoly total(Variable::t);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    LaurentPoly term = m[0][j] * laplace_determinant(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

int dense_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r) {
      if (!m[r][c].is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      Rational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> to_dense(const symknot::algebra::SparseRationalMatrix& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (const auto& e : m.entries()) out[e.row][e.col] = e.value;
  return out;
}

bool is_planar(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return true;
  std::map<int, std::vector<std::pair<int, int>>> ends;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) ends[d.crossings()[c][s]].emplace_back(c, s);
  }
  auto across = [&](int c, int s) {
    const auto& e = ends[d.crossings()[c][s]];
    return e[0] == std::pair(c, s) ? e[1] : e[0];
  };
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [l, e] : ends) parent[find(e[0].first)] = find(e[1].first);
  int pieces = 0;
  for (int c = 0; c < n; ++c) pieces += find(c) == c ? 1 : 0;

  std::vector<std::array<char, 4>> seen(n, {0, 0, 0, 0});
  int faces = 0;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      if (seen[c][s]) continue;
      ++faces;
      int cc = c, ss = s;
      while (!seen[cc][ss]) {
        seen[cc][ss] = 1;
        auto [c2, s2] = across(cc, ss);
        cc = c2;
        ss = (s2 + 1) % 4;
      }
    }
  }
  return n - 2 * n + faces == 2 * pieces;
}

PlanarDiagram add_kink(const PlanarDiagram& d, int arc, bool positive) {
  auto xs = d.crossings();
  auto labels = d.arcs();
  const int f = labels.back() + 1;
  const int g = labels.back() + 2;
  auto [hc, hs] = d.head(arc);
  xs[hc][hs] = g;
  if (positive) {
    xs.push_back({arc, g, f, f});
  } else {
    xs.push_back({arc, f, f, g});
  }
  return PlanarDiagram(std::move(xs), d.free_loops());
}

PlanarDiagram add_bigon(const PlanarDiagram& d, int crossing, int slot, bool first_over) {
  auto xs = d.crossings();
  const int s = slot;
  const int t = (slot + 1) % 4;
  const int p1 = xs[crossing][s];
  const int q1 = xs[crossing][t];
  if (p1 == q1) throw Error(symknot::ErrorKind::InvalidArgument, "bigon needs two distinct arcs");
  const int top = d.arcs().back();
  const int p2 = top + 1, p3 = top + 2, q2 = top + 3, q3 = top + 4;
  auto relabel_far = [&](int label, int replacement, int near_slot) {
    for (int c = 0; c < d.crossing_count(); ++c) {
      for (int k = 0; k < 4; ++k) {
        if (xs[c][k] == label && !(c == crossing && k == near_slot)) {
          xs[c][k] = replacement;
          return;
        }
      }
    }
  };
  relabel_far(p1, p3, s);
  relabel_far(q1, q3, t);
  const bool p_away = !d.is_incoming(crossing, s);
  const bool q_away = !d.is_incoming(crossing, t);
  if (first_over) {
    if (q_away) {
      xs.push_back({q1, p1, q2, p2});
      xs.push_back({q2, p3, q3, p2});
    } else {
      xs.push_back({q2, p2, q1, p1});
      xs.push_back({q3, p2, q2, p3});
    }
  } else {
    if (p_away) {
      xs.push_back({p1, q2, p2, q1});
      xs.push_back({p2, q2, p3, q3});
    } else {
      xs.push_back({p2, q1, p1, q2});
      xs.push_back({p3, q3, p2, q2});
    }
  }
  return PlanarDiagram(std::move(xs), d.free_loops(), d.is_split() ? Splitting::Allow : Splitting::Reject);
}

}  // namespace support
