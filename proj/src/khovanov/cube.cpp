#include "symknot/khovanov/cube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "symknot/error.hpp"

namespace symknot::khovanov {

namespace {

constexpr int kMaxCircles = 30;

int popcount(uint32_t x) { return std::popcount(x); }

}  // namespace

CubeComplex CubeComplex::build(const PlanarDiagram& d, const CubeOptions& options) {
  CubeComplex cube;
  const int n = d.crossing_count();
  if (n > options.max_crossings) {
    throw Error(ErrorKind::ResourceLimit, "diagram has " + std::to_string(n) + " crossings; the cube limit is " +
                                              std::to_string(options.max_crossings));
  }
  if (n > 24) throw Error(ErrorKind::ResourceLimit, "cube of resolutions beyond 24 crossings is not supported");
  cube.n_ = n;
  const diagram::CrossingCounts counts = d.counts();
  cube.n_plus_ = counts.positive;
  cube.n_minus_ = counts.negative;
  cube.loops_ = d.free_loops();

  const std::vector<int> arcs = d.arcs();
  cube.arc_count_ = static_cast<int>(arcs.size());
  auto arc_index = [&](int label) {
    return static_cast<int>(std::lower_bound(arcs.begin(), arcs.end(), label) - arcs.begin());
  };
  for (const auto& x : d.crossings()) {
    cube.crossings_.push_back({arc_index(x[0]), arc_index(x[1]), arc_index(x[2]), arc_index(x[3])});
  }

  const bool reduced = options.basepoint.has_value();
  if (reduced) {
    const int bp = *options.basepoint;
    const int top = arcs.empty() ? 0 : arcs.back();
    if (d.has_arc(bp)) {
      cube.marked_arc_ = arc_index(bp);
    } else if (bp > top && bp <= top + d.free_loops()) {
      cube.marked_loop_ = bp - top - 1;
    } else {
      throw Error(ErrorKind::InvalidArgument, "basepoint " + std::to_string(bp) + " is not an arc of the diagram");
    }
  }

  // Circles of every resolution.
  const uint32_t vertices = uint32_t{1} << n;
  const int a = cube.arc_count_;
  cube.circles_.resize(vertices);
  cube.circle_of_arc_.resize(size_t(vertices) * a);
  std::vector<int> parent(a);
  std::vector<int> id(a);
  long long total = 0;
  for (uint32_t v = 0; v < vertices; ++v) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int k = 0; k < n; ++k) {
      const auto& x = cube.crossings_[k];
      if ((v >> k) & 1) {
        parent[find(x[0])] = find(x[3]);
        parent[find(x[1])] = find(x[2]);
      } else {
        parent[find(x[0])] = find(x[1]);
        parent[find(x[2])] = find(x[3]);
      }
    }
    std::fill(id.begin(), id.end(), -1);
    int count = 0;
    for (int arc = 0; arc < a; ++arc) {
      int r = find(arc);
      if (id[r] < 0) id[r] = count++;
      cube.circle_of_arc_[size_t(v) * a + arc] = static_cast<uint8_t>(id[r]);
    }
    cube.circles_[v] = count + cube.loops_;
    if (cube.circles_[v] > kMaxCircles) throw Error(ErrorKind::ResourceLimit, "too many circles in a resolution");
    total += 1LL << (cube.circles_[v] - (reduced ? 1 : 0));
    if (total > kMaxGenerators) {
      throw Error(ErrorKind::ResourceLimit,
                  "cube of resolutions would exceed " + std::to_string(kMaxGenerators) + " generators");
    }
  }
  if (reduced && cube.circles_[0] == 0) throw Error(ErrorKind::InvalidArgument, "empty diagram has no basepoint");

  cube.offset_.resize(vertices);
  cube.vertex_of_.reserve(total);
  cube.labels_of_.reserve(total);
  cube.hdeg_.reserve(total);
  cube.qdeg_.reserve(total);
  for (uint32_t v = 0; v < vertices; ++v) {
    cube.offset_[v] = static_cast<int>(cube.vertex_of_.size());
    const int c = cube.circles_[v];
    const int m = reduced ? cube.marked_circle(v) : -1;
    const uint32_t count = uint32_t{1} << (c - (reduced ? 1 : 0));
    const int h = popcount(v) - cube.n_minus_;
    for (uint32_t packed = 0; packed < count; ++packed) {
      uint32_t labels = packed;
      if (reduced) {
        const uint32_t low = packed & ((uint32_t{1} << m) - 1);
        labels = low | (uint32_t{1} << m) | ((packed >> m) << (m + 1));
      }
      const int deg = c - 2 * popcount(labels);
      const int q = deg + popcount(v) + cube.n_plus_ - 2 * cube.n_minus_ + (reduced ? 1 : 0);
      const int g = static_cast<int>(cube.vertex_of_.size());
      cube.vertex_of_.push_back(v);
      cube.labels_of_.push_back(labels);
      cube.hdeg_.push_back(h);
      cube.qdeg_.push_back(q);
      cube.blocks_[{h, q}].push_back(g);
    }
  }
  return cube;
}

int CubeComplex::marked_circle(uint32_t vertex) const {
  if (marked_arc_ >= 0) return circle_of(vertex, marked_arc_);
  if (marked_loop_ >= 0) return arc_circles(vertex) + marked_loop_;
  return -1;
}

int CubeComplex::generator(uint32_t vertex, uint32_t labels) const {
  const int m = marked_circle(vertex);
  if (m < 0) return offset_[vertex] + static_cast<int>(labels);
  if (!((labels >> m) & 1)) return -1;
  const uint32_t low = labels & ((uint32_t{1} << m) - 1);
  return offset_[vertex] + static_cast<int>(low | ((labels >> (m + 1)) << m));
}

BigradedDims CubeComplex::chain_dims() const {
  BigradedDims dims;
  for (const auto& [bg, gens] : blocks_) dims.add(bg.first, bg.second, static_cast<long long>(gens.size()));
  return dims;
}

std::vector<int> CubeComplex::block(int i, int j) const {
  auto it = blocks_.find({i, j});
  return it == blocks_.end() ? std::vector<int>{} : it->second;
}

void CubeComplex::edges_from(int g, Differential kind, const std::function<void(const CubeEdge&)>& fn) const {
  const uint32_t v = vertex_of_[g];
  const uint32_t labels = labels_of_[g];
  const int c = circles_[v];
  const int arc_c = arc_circles(v);
  // One representative arc per arc circle of v.
  int rep[kMaxCircles];
  for (int arc = arc_count_ - 1; arc >= 0; --arc) rep[circle_of(v, arc)] = arc;

  for (int k = 0; k < n_; ++k) {
    if ((v >> k) & 1) continue;
    const uint32_t w = v | (uint32_t{1} << k);
    const int sign = popcount(v & ((uint32_t{1} << k) - 1)) % 2 ? -1 : 1;
    const auto& x = crossings_[k];
    const int p = circle_of(v, x[0]);
    const int q = circle_of(v, x[2]);
    const int arc_cw = arc_circles(w);

    uint32_t rest = 0;
    for (int t = 0; t < c; ++t) {
      if (t == p || t == q || !((labels >> t) & 1)) continue;
      const int image = t < arc_c ? circle_of(w, rep[t]) : arc_cw + (t - arc_c);
      rest |= uint32_t{1} << image;
    }
    auto emit = [&](uint32_t out_labels, int coefficient) {
      const int target = generator(w, out_labels);
      if (target >= 0) fn({g, target, sign * coefficient});
    };
    const bool xp = (labels >> p) & 1;
    if (p != q) {
      const uint32_t r = uint32_t{1} << circle_of(w, x[0]);
      const bool xq = (labels >> q) & 1;
      if (!xp && !xq) {
        emit(rest, 1);
      } else if (xp != xq) {
        emit(rest | r, 1);
      } else if (kind == Differential::Lee) {
        emit(rest, 1);
      }
    } else {
      const uint32_t r1 = uint32_t{1} << circle_of(w, x[0]);
      const uint32_t r2 = uint32_t{1} << circle_of(w, x[1]);
      if (!xp) {
        emit(rest | r2, 1);
        emit(rest | r1, 1);
      } else {
        emit(rest | r1 | r2, 1);
        if (kind == Differential::Lee) emit(rest, 1);
      }
    }
  }
}

void CubeComplex::for_each_edge(Differential kind, const std::function<void(const CubeEdge&)>& fn) const {
  if (kind == Differential::Lee && (marked_arc_ >= 0 || marked_loop_ >= 0)) {
    throw Error(ErrorKind::Precondition, "the Lee deformation is only defined on the unreduced cube");
  }
  for (int g = 0; g < generator_count(); ++g) edges_from(g, kind, fn);
}

std::vector<CubeEdge> CubeComplex::edges(Differential kind) const {
  std::vector<CubeEdge> out;
  for_each_edge(kind, [&](const CubeEdge& e) { out.push_back(e); });
  return out;
}

algebra::SparseRationalMatrix CubeComplex::differential(int i, int j) const {
  const std::vector<int> cols = block(i, j);
  const std::vector<int> rows = block(i + 1, j);
  std::vector<algebra::Triplet> entries;
  for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
    edges_from(cols[c], Differential::Khovanov, [&](const CubeEdge& e) {
      const int r = static_cast<int>(std::lower_bound(rows.begin(), rows.end(), e.target) - rows.begin());
      entries.push_back({r, c, algebra::Rational(e.coefficient)});
    });
  }
  return algebra::SparseRationalMatrix::from_triplets(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                                                      std::move(entries));
}

}  // namespace symknot::khovanov
