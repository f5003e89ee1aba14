#pragma once

#include <utility>
#include <vector>

#include "symknot/algebra/rational.hpp"

namespace symknot::algebra {

// Sparse vector as (index, value) pairs sorted by index, values nonzero.
using SparseVector = std::vector<std::pair<int, Rational>>;

struct Triplet {
  int row;
  int col;
  Rational value;
};

class SparseRationalMatrix {
 public:
  struct Entry {
    int row;
    int col;
    Rational value;
  };

  SparseRationalMatrix() = default;
  SparseRationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  // Duplicate positions are summed; zero results are dropped.
  static SparseRationalMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets);
  static SparseRationalMatrix from_columns(int rows, const std::vector<SparseVector>& columns);
  static SparseRationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t nnz() const { return entries_.size(); }
  // Entries sorted by (row, col).
  const std::vector<Entry>& entries() const& { return entries_; }
  std::vector<Entry> entries() && { return std::move(entries_); }
  Rational at(int r, int c) const;
  bool is_zero() const { return entries_.empty(); }

  SparseRationalMatrix transpose() const;
  SparseRationalMatrix operator*(const SparseRationalMatrix& o) const;
  SparseVector apply(const SparseVector& v) const;
  // Columns of this followed by columns of o; row counts must agree.
  SparseRationalMatrix hconcat(const SparseRationalMatrix& o) const;
  std::vector<SparseVector> columns() const;

  friend bool operator==(const SparseRationalMatrix& a, const SparseRationalMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Entry> entries_;
};

struct RankKernel {
  int rank = 0;
  int kernel_dimension = 0;
  std::vector<SparseVector> kernel_basis;
};

int rank(const SparseRationalMatrix& m);
RankKernel rank_and_kernel(const SparseRationalMatrix& m);

}  // namespace symknot::algebra
