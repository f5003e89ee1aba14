#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "symknot/algebra/laurent.hpp"
#include "symknot/jones/jones.hpp"

namespace symknot::khovanov {

// (homological i, quantum j)
using Bigrading = std::pair<int, int>;

// Dimensions of a bigraded vector space. Only nonzero entries are stored.
class BigradedDims {
 public:
  BigradedDims() = default;

  void add(int i, int j, long long dim);
  long long at(int i, int j) const;
  const std::map<Bigrading, long long>& entries() const& { return dims_; }
  std::map<Bigrading, long long> entries() && { return std::move(dims_); }
  bool empty() const { return dims_.empty(); }
  long long total() const;

  // Quantum range of the support; throws on an empty table.
  int max_quantum() const;
  int min_quantum() const;

  BigradedDims shifted(int di, int dj) const;
  // (i, j) -> (-i, -j)
  BigradedDims reflected() const;

  nlohmann::json to_json() const;
  static BigradedDims from_json(const nlohmann::json& j);
  // Rows by quantum grading (top = largest), columns by homological grading.
  std::string grid() const;

  friend bool operator==(const BigradedDims& a, const BigradedDims& b) { return a.dims_ == b.dims_; }
  friend bool operator!=(const BigradedDims& a, const BigradedDims& b) { return !(a == b); }

 private:
  std::map<Bigrading, long long> dims_;
};

// Sum of (-1)^i q^j dim.
algebra::LaurentPoly graded_euler(const BigradedDims& dims);

jones::Amphichirality kh_symmetry_check(const BigradedDims& dims);

struct MaximalBigrading {
  int a = 0;
  int b = 0;
  friend bool operator==(const MaximalBigrading& x, const MaximalBigrading& y) { return x.a == y.a && x.b == y.b; }
};

// Removes one dimension at each of (0, s-1) and (0, s+1), then takes the
// largest quantum grading b left and the largest homological grading a within
// it. Empty remainder gives nullopt.
std::optional<MaximalBigrading> maximal_bigrading(const BigradedDims& dims, int s);

}  // namespace symknot::khovanov
