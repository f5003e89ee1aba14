#include "symknot/algebra/sparse_matrix.hpp"

#include <algorithm>
#include <queue>

#include "symknot/error.hpp"

namespace symknot::algebra {

SparseRationalMatrix SparseRationalMatrix::from_triplets(int rows, int cols,
                                                         std::vector<Triplet> triplets) {
  if (rows < 0 || cols < 0) throw Error(ErrorKind::InvalidArgument, "negative matrix dimension");
  SparseRationalMatrix m(rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (auto& t : triplets) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols) {
      throw Error(ErrorKind::InvalidArgument, "matrix entry out of bounds");
    }
    if (!m.entries_.empty() && m.entries_.back().row == t.row && m.entries_.back().col == t.col) {
      m.entries_.back().value += t.value;
      if (m.entries_.back().value.is_zero()) m.entries_.pop_back();
    } else if (!t.value.is_zero()) {
      m.entries_.push_back({t.row, t.col, std::move(t.value)});
    }
  }
  return m;
}

SparseRationalMatrix SparseRationalMatrix::from_columns(int rows,
                                                        const std::vector<SparseVector>& columns) {
  std::vector<Triplet> t;
  for (size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, v] : columns[c]) t.push_back({r, static_cast<int>(c), v});
  }
  return from_triplets(rows, static_cast<int>(columns.size()), std::move(t));
}

SparseRationalMatrix SparseRationalMatrix::identity(int n) {
  SparseRationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.entries_.push_back({i, i, Rational(1)});
  return m;
}

Rational SparseRationalMatrix::at(int r, int c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(r, c),
                             [](const Entry& e, const std::pair<int, int>& k) {
                               return e.row != k.first ? e.row < k.first : e.col < k.second;
                             });
  if (it != entries_.end() && it->row == r && it->col == c) return it->value;
  return Rational(0);
}

SparseRationalMatrix SparseRationalMatrix::transpose() const {
  SparseRationalMatrix t(cols_, rows_);
  t.entries_.reserve(entries_.size());
  for (const auto& e : entries_) t.entries_.push_back({e.col, e.row, e.value});
  std::sort(t.entries_.begin(), t.entries_.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return t;
}

SparseRationalMatrix SparseRationalMatrix::operator*(const SparseRationalMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::InvalidArgument, "matrix product dimension mismatch");
  // Row-by-row accumulation using o's row ranges.
  std::vector<size_t> start(o.rows_ + 1, 0);
  for (const auto& e : o.entries_) ++start[e.row + 1];
  for (int i = 0; i < o.rows_; ++i) start[i + 1] += start[i];

  SparseRationalMatrix p(rows_, o.cols_);
  std::vector<Rational> acc(o.cols_);
  std::vector<char> used(o.cols_, 0);
  std::vector<int> touched;
  size_t i = 0;
  while (i < entries_.size()) {
    int r = entries_[i].row;
    for (; i < entries_.size() && entries_[i].row == r; ++i) {
      const auto& a = entries_[i];
      for (size_t k = start[a.col]; k < start[a.col + 1]; ++k) {
        const auto& b = o.entries_[k];
        if (!used[b.col]) {
          used[b.col] = 1;
          touched.push_back(b.col);
          acc[b.col] = a.value * b.value;
        } else {
          acc[b.col] += a.value * b.value;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int c : touched) {
      if (!acc[c].is_zero()) p.entries_.push_back({r, c, acc[c]});
      used[c] = 0;
    }
    touched.clear();
  }
  return p;
}

SparseVector SparseRationalMatrix::apply(const SparseVector& v) const {
  std::vector<Rational> dense(cols_);
  for (const auto& [c, x] : v) {
    if (c < 0 || c >= cols_) throw Error(ErrorKind::InvalidArgument, "vector index out of bounds");
    dense[c] = x;
  }
  SparseVector out;
  Rational acc;
  int cur = -1;
  for (const auto& e : entries_) {
    if (e.row != cur) {
      if (cur >= 0 && !acc.is_zero()) out.emplace_back(cur, acc);
      cur = e.row;
      acc = Rational(0);
    }
    if (!dense[e.col].is_zero()) acc += e.value * dense[e.col];
  }
  if (cur >= 0 && !acc.is_zero()) out.emplace_back(cur, acc);
  return out;
}

SparseRationalMatrix SparseRationalMatrix::hconcat(const SparseRationalMatrix& o) const {
  if (rows_ != o.rows_) throw Error(ErrorKind::InvalidArgument, "hconcat row mismatch");
  std::vector<Triplet> t;
  t.reserve(nnz() + o.nnz());
  for (const auto& e : entries_) t.push_back({e.row, e.col, e.value});
  for (const auto& e : o.entries_) t.push_back({e.row, e.col + cols_, e.value});
  return from_triplets(rows_, cols_ + o.cols_, std::move(t));
}

std::vector<SparseVector> SparseRationalMatrix::columns() const {
  std::vector<SparseVector> cols(cols_);
  for (const auto& e : entries_) cols[e.col].emplace_back(e.row, e.value);
  return cols;
}

bool operator==(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size()) return false;
  for (size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
  }
  return true;
}

namespace {

// row_s <- row_s - f * row_r, both sorted by column.
void axpy(SparseVector& s, const Rational& f, const SparseVector& r, std::vector<int>& new_cols) {
  SparseVector out;
  out.reserve(s.size() + r.size());
  size_t i = 0, j = 0;
  while (i < s.size() || j < r.size()) {
    if (j == r.size() || (i < s.size() && s[i].first < r[j].first)) {
      out.push_back(std::move(s[i++]));
    } else if (i == s.size() || r[j].first < s[i].first) {
      new_cols.push_back(r[j].first);
      out.emplace_back(r[j].first, -(f * r[j].second));
      ++j;
    } else {
      Rational v = s[i].second - f * r[j].second;
      if (!v.is_zero()) out.emplace_back(s[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  s = std::move(out);
}

const Rational* find_col(const SparseVector& row, int c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const std::pair<int, Rational>& e, int k) { return e.first < k; });
  if (it != row.end() && it->first == c) return &it->second;
  return nullptr;
}

// Sparse Gaussian elimination with a Markowitz-style pivot choice: take the
// shortest active row, then within it the column touching the fewest rows,
// preferring unit pivots. With `jordan` set, pivot columns are also cleared
// from earlier pivot rows, which are normalized to a leading 1.
struct Eliminator {
  int ncols;
  std::vector<SparseVector> rows;
  std::vector<std::vector<int>> col_rows;
  std::vector<char> active;
  std::vector<std::pair<int, int>> pivots;  // (row, col)

  Eliminator(const SparseRationalMatrix& m) : ncols(m.cols()), rows(m.rows()), col_rows(m.cols()) {
    for (const auto& e : m.entries()) {
      rows[e.row].emplace_back(e.col, e.value);
      col_rows[e.col].push_back(e.row);
    }
    active.assign(rows.size(), 1);
  }

  void run(bool jordan) {
    using Item = std::pair<size_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (size_t r = 0; r < rows.size(); ++r) queue.push({rows[r].size(), static_cast<int>(r)});
    std::vector<int> stamp(rows.size(), -1);
    std::vector<int> new_cols;
    int step = 0;
    while (!queue.empty()) {
      auto [len, r] = queue.top();
      queue.pop();
      if (!active[r] || len != rows[r].size()) continue;
      active[r] = 0;
      if (rows[r].empty()) continue;

      size_t best = 0;
      size_t best_cost = SIZE_MAX;
      bool best_unit = false;
      for (size_t k = 0; k < rows[r].size(); ++k) {
        size_t cost = col_rows[rows[r][k].first].size();
        bool unit = rows[r][k].second.is_unit();
        if (cost < best_cost || (cost == best_cost && unit && !best_unit)) {
          best = k;
          best_cost = cost;
          best_unit = unit;
        }
      }
      const int c = rows[r][best].first;
      if (jordan) {
        Rational inv = Rational(1) / rows[r][best].second;
        for (auto& e : rows[r]) e.second *= inv;
      }
      const Rational pivot = rows[r][best].second;
      pivots.emplace_back(r, c);

      std::vector<int> targets;
      targets.swap(col_rows[c]);
      for (int s : targets) {
        if (s == r || stamp[s] == step) continue;
        stamp[s] = step;
        if (!active[s] && !jordan) continue;
        const Rational* v = find_col(rows[s], c);
        if (!v) continue;
        Rational f = *v / pivot;
        new_cols.clear();
        axpy(rows[s], f, rows[r], new_cols);
        for (int nc : new_cols) col_rows[nc].push_back(s);
        if (active[s]) queue.push({rows[s].size(), s});
      }
      if (jordan) col_rows[c].push_back(r);
      ++step;
    }
  }
};

}  // namespace

int rank(const SparseRationalMatrix& m) {
  Eliminator e(m);
  e.run(false);
  return static_cast<int>(e.pivots.size());
}

RankKernel rank_and_kernel(const SparseRationalMatrix& m) {
  Eliminator e(m);
  e.run(true);
  RankKernel out;
  out.rank = static_cast<int>(e.pivots.size());
  out.kernel_dimension = m.cols() - out.rank;

  std::vector<int> pivot_row_of_col(m.cols(), -1);
  for (auto [r, c] : e.pivots) pivot_row_of_col[c] = r;
  std::vector<int> free_index(m.cols(), -1);
  for (int c = 0; c < m.cols(); ++c) {
    if (pivot_row_of_col[c] < 0) {
      free_index[c] = static_cast<int>(out.kernel_basis.size());
      out.kernel_basis.push_back({{c, Rational(1)}});
    }
  }
  for (auto [r, c] : e.pivots) {
    for (const auto& [col, v] : e.rows[r]) {
      if (col == c) continue;
      if (free_index[col] < 0) throw Error(ErrorKind::Integrity, "pivot column left in reduced row");
      out.kernel_basis[free_index[col]].emplace_back(c, -v);
    }
  }
  for (auto& v : out.kernel_basis) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return out;
}

}  // namespace symknot::algebra
