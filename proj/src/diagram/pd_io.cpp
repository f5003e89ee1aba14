#include "symknot/diagram/pd_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "symknot/error.hpp"

namespace symknot::diagram {

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }
  }

  PlanarDiagram parse(Splitting split) {
    bool wrapped = accept("PD[");
    std::vector<Crossing> xs;
    int loops = 0;
    bool any = false;
    while (pos_ < s_.size() && s_[pos_] != ']') {
      if (any) expect(",");
      any = true;
      if (accept("X[")) {
        Crossing x;
        for (int k = 0; k < 4; ++k) {
          if (k) expect(",");
          x[k] = number();
        }
        expect("]");
        xs.push_back(x);
      } else if (accept("Loop[")) {
        number();
        expect("]");
        ++loops;
      } else {
        fail("expected X[...] or Loop[...]");
      }
    }
    if (wrapped) expect("]");
    if (pos_ != s_.size()) fail("trailing characters");
    if (xs.empty() && loops == 0) {
      if (!wrapped) fail("empty input");
      loops = 1;
    }
    return PlanarDiagram(std::move(xs), loops, split);
  }

 private:
  bool accept(std::string_view tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  int number() {
    size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) fail("expected a number");
    try {
      return std::stoi(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      fail("label out of range");
    }
    return 0;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::MalformedSyntax, "PD text, position " + std::to_string(pos_) + ": " + why);
  }

  std::string s_;
  size_t pos_ = 0;
};

std::array<int, 4> quad(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(ErrorKind::MalformedSyntax, "crossing must list 4 labels");
  std::array<int, 4> x;
  for (int k = 0; k < 4; ++k) {
    if (!j[k].is_number_integer()) throw Error(ErrorKind::MalformedSyntax, "crossing labels must be integers");
    x[k] = j[k].get<int>();
  }
  return x;
}

}  // namespace

PlanarDiagram parse_pd(std::string_view text, Splitting split) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::MalformedSyntax, std::string("JSON: ") + e.what());
    }
    return diagram_from_json(j, split);
  }
  return TextParser(text).parse(split);
}

PlanarDiagram read_pd_file(const std::string& path, Splitting split) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pd(ss.str(), split);
}

std::string to_pd_text(const PlanarDiagram& d) {
  std::string out = "PD[";
  bool first = true;
  int top = 0;
  for (const auto& x : d.crossings()) {
    if (!first) out += ',';
    first = false;
    out += "X[";
    for (int k = 0; k < 4; ++k) {
      if (k) out += ',';
      out += std::to_string(x[k]);
      top = std::max(top, x[k]);
    }
    out += ']';
  }
  for (int i = 0; i < d.free_loops(); ++i) {
    if (!first) out += ',';
    first = false;
    out += "Loop[" + std::to_string(top + i + 1) + "]";
  }
  out += ']';
  return out;
}

nlohmann::json to_json(const PlanarDiagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& x : d.crossings()) j["crossings"].push_back(x);
  if (d.free_loops() > 0) j["loops"] = d.free_loops();
  if (!d.name().empty()) j["name"] = d.name();
  if (d.is_split()) j["split"] = true;
  return j;
}

PlanarDiagram diagram_from_json(const nlohmann::json& j, Splitting split) {
  if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array()) {
    throw Error(ErrorKind::MalformedSyntax, "diagram JSON needs a \"crossings\" array");
  }
  std::vector<Crossing> xs;
  for (const auto& c : j["crossings"]) xs.push_back(quad(c));
  int loops = 0;
  if (j.contains("loops")) {
    if (!j["loops"].is_number_integer()) throw Error(ErrorKind::MalformedSyntax, "\"loops\" must be an integer");
    loops = j["loops"].get<int>();
  }
  if (xs.empty() && loops == 0) loops = 1;
  if (j.value("split", false)) split = Splitting::Allow;
  PlanarDiagram d(std::move(xs), loops, split);
  if (j.contains("name") && j["name"].is_string()) d.set_name(j["name"].get<std::string>());
  return d;
}

nlohmann::json to_json(const TangleCode& t) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& x : t.crossings) j["crossings"].push_back(x);
  j["endpoints"] = t.endpoints;
  j["slots"] = t.slots;
  if (!t.arcs.empty()) {
    j["arcs"] = nlohmann::json::array();
    for (auto [a, b] : t.arcs) j["arcs"].push_back({a, b});
  }
  return j;
}

TangleCode tangle_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("crossings") || !j.contains("endpoints")) {
    throw Error(ErrorKind::MalformedSyntax, "tangle JSON needs \"crossings\" and \"endpoints\"");
  }
  TangleCode t;
  try {
    for (const auto& c : j.at("crossings")) t.crossings.push_back(quad(c));
    t.endpoints = j.at("endpoints").get<std::vector<int>>();
    t.slots = j.contains("slots") ? j.at("slots").get<int>()
                                  : static_cast<int>(t.endpoints.size() / 2) - 1;
    if (j.contains("arcs")) {
      for (const auto& a : j.at("arcs")) {
        if (!a.is_array() || a.size() != 2) throw Error(ErrorKind::MalformedSyntax, "arc must list 2 endpoints");
        t.arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSyntax, std::string("tangle JSON: ") + e.what());
  }
  t.validate();
  return t;
}

}  // namespace symknot::diagram
