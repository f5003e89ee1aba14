#include "symknot/khovanov/bigraded.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "symknot/error.hpp"

namespace symknot::khovanov {

void BigradedDims::add(int i, int j, long long dim) {
  if (dim == 0) return;
  auto& slot = dims_[{i, j}];
  slot += dim;
  if (slot < 0) throw Error(ErrorKind::Integrity, "negative dimension in bigraded table");
  if (slot == 0) dims_.erase({i, j});
}

long long BigradedDims::at(int i, int j) const {
  auto it = dims_.find({i, j});
  return it == dims_.end() ? 0 : it->second;
}

long long BigradedDims::total() const {
  long long t = 0;
  for (const auto& [bg, dim] : dims_) t += dim;
  return t;
}

int BigradedDims::max_quantum() const {
  if (dims_.empty()) throw Error(ErrorKind::InvalidArgument, "empty bigraded table");
  int best = dims_.begin()->first.second;
  for (const auto& [bg, dim] : dims_) best = std::max(best, bg.second);
  return best;
}

int BigradedDims::min_quantum() const {
  if (dims_.empty()) throw Error(ErrorKind::InvalidArgument, "empty bigraded table");
  int best = dims_.begin()->first.second;
  for (const auto& [bg, dim] : dims_) best = std::min(best, bg.second);
  return best;
}

BigradedDims BigradedDims::shifted(int di, int dj) const {
  BigradedDims out;
  for (const auto& [bg, dim] : dims_) out.dims_[{bg.first + di, bg.second + dj}] = dim;
  return out;
}

BigradedDims BigradedDims::reflected() const {
  BigradedDims out;
  for (const auto& [bg, dim] : dims_) out.dims_[{-bg.first, -bg.second}] = dim;
  return out;
}

nlohmann::json BigradedDims::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [bg, dim] : dims_) j[std::to_string(bg.first) + "," + std::to_string(bg.second)] = dim;
  return j;
}

BigradedDims BigradedDims::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::MalformedSyntax, "bigraded table must be a JSON object");
  BigradedDims out;
  for (const auto& [key, value] : j.items()) {
    int i = 0, q = 0;
    char comma = 0;
    std::istringstream in(key);
    if (!(in >> i >> comma >> q) || comma != ',' || !in.eof()) {
      throw Error(ErrorKind::MalformedSyntax, "bad bigrading key '" + key + "'");
    }
    if (!value.is_number_integer() || value.get<long long>() <= 0) {
      throw Error(ErrorKind::MalformedSyntax, "dimension at '" + key + "' must be a positive integer");
    }
    out.add(i, q, value.get<long long>());
  }
  return out;
}

std::string BigradedDims::grid() const {
  if (dims_.empty()) return "(zero)\n";
  std::set<int> is, js;
  for (const auto& [bg, dim] : dims_) {
    is.insert(bg.first);
    js.insert(bg.second);
  }
  const int i0 = *is.begin(), i1 = *is.rbegin();
  size_t width = 3;
  for (const auto& [bg, dim] : dims_) width = std::max(width, std::to_string(dim).size() + 1);
  for (int i = i0; i <= i1; ++i) width = std::max(width, std::to_string(i).size() + 1);
  auto pad = [&](const std::string& s) { return std::string(width - std::min(width, s.size()), ' ') + s; };

  std::ostringstream out;
  out << pad("j\\i");
  for (int i = i0; i <= i1; ++i) out << pad(std::to_string(i));
  out << '\n';
  for (auto it = js.rbegin(); it != js.rend(); ++it) {
    out << pad(std::to_string(*it));
    for (int i = i0; i <= i1; ++i) {
      long long dim = at(i, *it);
      out << pad(dim ? std::to_string(dim) : ".");
    }
    out << '\n';
  }
  return out.str();
}

algebra::LaurentPoly graded_euler(const BigradedDims& dims) {
  algebra::LaurentPoly p(algebra::Variable::q);
  for (const auto& [bg, dim] : dims.entries()) {
    const long signed_dim = static_cast<long>(bg.first % 2 ? -dim : dim);
    p += algebra::LaurentPoly::monomial(algebra::Variable::q, algebra::BigInt(signed_dim), bg.second);
  }
  return p;
}

jones::Amphichirality kh_symmetry_check(const BigradedDims& dims) {
  return dims.reflected() == dims ? jones::Amphichirality::Inconclusive : jones::Amphichirality::NotAmphichiral;
}

std::optional<MaximalBigrading> maximal_bigrading(const BigradedDims& dims, int s) {
  BigradedDims rest = dims;
  for (int j : {s - 1, s + 1}) {
    if (rest.at(0, j) < 1) {
      throw Error(ErrorKind::Integrity,
                  "table has no generator at the Lee bigrading (0," + std::to_string(j) + ")");
    }
    rest.add(0, j, -1);
  }
  if (rest.empty()) return std::nullopt;
  MaximalBigrading m;
  m.b = rest.max_quantum();
  bool found = false;
  for (const auto& [bg, dim] : rest.entries()) {
    if (bg.second != m.b) continue;
    if (!found || bg.first > m.a) m.a = bg.first;
    found = true;
  }
  return m;
}

}  // namespace symknot::khovanov
