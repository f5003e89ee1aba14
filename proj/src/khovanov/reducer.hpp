#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "symknot/algebra/rational.hpp"

namespace symknot::khovanov {

// Chain complex over Q reduced by Gaussian elimination: cancelling an
// invertible entry x -> y removes both generators and adds the zig-zag
// correction to every path z -> y, x -> w. The result is chain homotopy
// equivalent to the input. Cancelling only entries of the smallest quantum
// jump keeps the reduction filtered.
class ChainReducer {
 public:
  int add_generator(int hdeg, int qdeg);
  void add_entry(int source, int target, const algebra::Rational& c);

  int hdeg(int g) const { return hdeg_[g]; }
  int qdeg(int g) const { return qdeg_[g]; }
  bool alive(int g) const { return alive_[g]; }
  long long entry_count() const { return entries_; }

  // Smallest q(target) - q(source) over the remaining entries.
  std::optional<int> min_jump() const;
  // Cancels entries with the given jump until none are left; with nullopt
  // cancels everything.
  void cancel(std::optional<int> jump);

  std::vector<int> survivors() const;

 private:
  struct Row {
    std::vector<std::pair<int, algebra::Rational>> out;
    std::vector<int> in;
  };

  algebra::Rational* find_out(int source, int target);
  void add_to(int source, int target, const algebra::Rational& c);
  void remove_out(int source, int target);
  void erase_generator(int g);
  void cancel_pair(int x, int y);
  bool qualifies(int x, int y, std::optional<int> jump) const;

  std::vector<int> hdeg_;
  std::vector<int> qdeg_;
  std::vector<char> alive_;
  std::vector<Row> rows_;
  long long entries_ = 0;
};

}  // namespace symknot::khovanov
