#include "reducer.hpp"

#include <algorithm>
#include <limits>

#include "symknot/error.hpp"

namespace symknot::khovanov {

using algebra::Rational;

int ChainReducer::add_generator(int hdeg, int qdeg) {
  hdeg_.push_back(hdeg);
  qdeg_.push_back(qdeg);
  alive_.push_back(1);
  rows_.emplace_back();
  return static_cast<int>(rows_.size()) - 1;
}

void ChainReducer::add_entry(int source, int target, const Rational& c) {
  if (hdeg_[target] != hdeg_[source] + 1) {
    throw Error(ErrorKind::Integrity, "differential entry does not raise homological degree by one");
  }
  add_to(source, target, c);
}

Rational* ChainReducer::find_out(int source, int target) {
  for (auto& [t, c] : rows_[source].out) {
    if (t == target) return &c;
  }
  return nullptr;
}

void ChainReducer::add_to(int source, int target, const Rational& c) {
  if (c.is_zero()) return;
  if (Rational* slot = find_out(source, target)) {
    *slot += c;
    if (slot->is_zero()) remove_out(source, target);
    return;
  }
  rows_[source].out.emplace_back(target, c);
  rows_[target].in.push_back(source);
  ++entries_;
}

void ChainReducer::remove_out(int source, int target) {
  auto& out = rows_[source].out;
  for (size_t k = 0; k < out.size(); ++k) {
    if (out[k].first == target) {
      out[k] = std::move(out.back());
      out.pop_back();
      break;
    }
  }
  auto& in = rows_[target].in;
  auto it = std::find(in.begin(), in.end(), source);
  if (it != in.end()) {
    *it = in.back();
    in.pop_back();
  }
  --entries_;
}

void ChainReducer::erase_generator(int g) {
  while (!rows_[g].out.empty()) remove_out(g, rows_[g].out.back().first);
  while (!rows_[g].in.empty()) remove_out(rows_[g].in.back(), g);
  alive_[g] = 0;
}

void ChainReducer::cancel_pair(int x, int y) {
  const Rational pivot = *find_out(x, y);
  std::vector<std::pair<int, Rational>> from_x;
  for (const auto& [w, b] : rows_[x].out) {
    if (w != y) from_x.emplace_back(w, b);
  }
  std::vector<int> into_y;
  for (int z : rows_[y].in) {
    if (z != x) into_y.push_back(z);
  }
  for (int z : into_y) {
    const Rational f = -(*find_out(z, y) / pivot);
    for (const auto& [w, b] : from_x) add_to(z, w, f * b);
  }
  erase_generator(x);
  erase_generator(y);
}

bool ChainReducer::qualifies(int x, int y, std::optional<int> jump) const {
  return !jump || qdeg_[y] - qdeg_[x] == *jump;
}

std::optional<int> ChainReducer::min_jump() const {
  std::optional<int> best;
  for (size_t x = 0; x < rows_.size(); ++x) {
    for (const auto& [y, c] : rows_[x].out) {
      const int j = qdeg_[y] - qdeg_[x];
      if (!best || j < *best) best = j;
    }
  }
  return best;
}

void ChainReducer::cancel(std::optional<int> jump) {
  // Markowitz-style passes: cheap pivots first, the cost bound grows only when
  // a pass finds nothing at the current bound.
  long long bound = 0;
  for (;;) {
    bool seen = false;
    bool cancelled = false;
    for (int x = 0; x < static_cast<int>(rows_.size()); ++x) {
      for (;;) {
        if (!alive_[x] || rows_[x].out.empty()) break;
        int best = -1;
        long long best_cost = std::numeric_limits<long long>::max();
        bool best_unit = false;
        const long long fan_out = static_cast<long long>(rows_[x].out.size()) - 1;
        for (const auto& [y, c] : rows_[x].out) {
          if (!qualifies(x, y, jump)) continue;
          seen = true;
          const long long cost = fan_out * (static_cast<long long>(rows_[y].in.size()) - 1);
          const bool unit = c.is_unit();
          if (cost < best_cost || (cost == best_cost && unit && !best_unit)) {
            best = y;
            best_cost = cost;
            best_unit = unit;
          }
        }
        if (best < 0 || best_cost > bound) break;
        cancel_pair(x, best);
        cancelled = true;
      }
    }
    if (!seen) return;
    if (!cancelled) bound = bound ? bound * 2 : 1;
  }
}

std::vector<int> ChainReducer::survivors() const {
  std::vector<int> out;
  for (size_t g = 0; g < alive_.size(); ++g) {
    if (alive_[g]) out.push_back(static_cast<int>(g));
  }
  return out;
}

}  // namespace symknot::khovanov
