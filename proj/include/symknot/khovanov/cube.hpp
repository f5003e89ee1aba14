#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "symknot/algebra/rational.hpp"
#include "symknot/algebra/sparse_matrix.hpp"
#include "symknot/diagram/planar_diagram.hpp"
#include "symknot/khovanov/bigraded.hpp"

namespace symknot::khovanov {

using diagram::PlanarDiagram;

constexpr int kDefaultCrossingLimit = 14;
// Generators allowed before a cube is refused up front.
constexpr long long kMaxGenerators = 6'000'000;

enum class Differential {
  Khovanov,
  // Lee deformation: adds x*x -> 1 on merges and x -> 1*1 on splits.
  Lee,
};

struct CubeOptions {
  int max_crossings = kDefaultCrossingLimit;
  // Arc label (or loop label past the last arc) of the marked circle. When set
  // only generators with the marked circle labeled x are kept and quantum
  // gradings shift up by one.
  std::optional<int> basepoint;
};

struct CubeEdge {
  int source = 0;
  int target = 0;
  int coefficient = 0;
};

// Cube of resolutions with Bar-Natan gradings: i = |v| - n-, j = deg + |v| +
// n+ - 2n-, where deg counts 1-labels minus x-labels. The 0-smoothing pairs
// slots (0,1),(2,3); the 1-smoothing pairs (0,3),(1,2).
class CubeComplex {
 public:
  static CubeComplex build(const PlanarDiagram& d, const CubeOptions& options = {});

  int crossing_count() const { return n_; }
  int positive() const { return n_plus_; }
  int negative() const { return n_minus_; }

  int vertex_count() const { return static_cast<int>(circles_.size()); }
  int circles(uint32_t vertex) const { return circles_[vertex]; }
  int generator_count() const { return static_cast<int>(vertex_of_.size()); }
  uint32_t vertex_of(int g) const { return vertex_of_[g]; }
  // Bit c set means circle c carries x.
  uint32_t labels_of(int g) const { return labels_of_[g]; }
  int hdeg(int g) const { return hdeg_[g]; }
  int qdeg(int g) const { return qdeg_[g]; }

  BigradedDims chain_dims() const;
  // Generator ids of one bigrading, increasing.
  std::vector<int> block(int i, int j) const;

  // Every nonzero component of the differential.
  void for_each_edge(Differential kind, const std::function<void(const CubeEdge&)>& fn) const;
  std::vector<CubeEdge> edges(Differential kind) const;

  // Khovanov differential C^{i,j} -> C^{i+1,j}; rows follow block(i+1,j),
  // columns follow block(i,j).
  algebra::SparseRationalMatrix differential(int i, int j) const;

 private:
  int n_ = 0;
  int n_plus_ = 0;
  int n_minus_ = 0;
  int loops_ = 0;
  int marked_arc_ = -1;   // arc index of the basepoint
  int marked_loop_ = -1;  // or loop index
  std::vector<std::array<int, 4>> crossings_;  // arc indices
  int arc_count_ = 0;
  std::vector<int> circles_;
  std::vector<uint8_t> circle_of_arc_;  // vertex * arc_count_ + arc
  std::vector<int> offset_;             // first generator of each vertex, or -1
  std::vector<uint32_t> vertex_of_;
  std::vector<uint32_t> labels_of_;
  std::vector<int> hdeg_;
  std::vector<int> qdeg_;
  std::map<Bigrading, std::vector<int>> blocks_;

  int arc_circles(uint32_t vertex) const { return circles_[vertex] - loops_; }
  int circle_of(uint32_t vertex, int arc) const { return circle_of_arc_[size_t(vertex) * arc_count_ + arc]; }
  int marked_circle(uint32_t vertex) const;
  // Generator with the given labels at a vertex, or -1 when the reduced cube
  // drops it.
  int generator(uint32_t vertex, uint32_t labels) const;
  void edges_from(int g, Differential kind, const std::function<void(const CubeEdge&)>& fn) const;
};

}  // namespace symknot::khovanov
