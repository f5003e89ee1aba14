#include "symknot/cli/record.hpp"

#include <chrono>
#include <ctime>

#include "symknot/diagram/pd_io.hpp"
#include "symknot/error.hpp"
#include "symknot/jones/jones.hpp"
#include "symknot/khovanov/khovanov.hpp"

namespace symknot::cli {

namespace {

template <typename T>
void put_optional(nlohmann::json& j, const char* field, const std::optional<T>& v) {
  j[field] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> get_optional(const nlohmann::json& j, const char* field) {
  if (!j.contains(field) || j.at(field).is_null()) return std::nullopt;
  return j.at(field).get<T>();
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json InvariantRecord::to_json() const {
  nlohmann::json j;
  j["key"] = key;
  j["name"] = name;
  j["pd"] = pd;
  j["crossings"] = crossings;
  j["components"] = components;
  j["jones"] = jones;
  put_optional(j, "alexander", alexander);
  put_optional(j, "determinant", determinant);
  put_optional(j, "s", s);
  j["kh"] = kh;
  j["created"] = created;
  return j;
}

InvariantRecord InvariantRecord::from_json(const nlohmann::json& j) {
  try {
    InvariantRecord r;
    r.key = j.at("key").get<std::string>();
    r.name = j.value("name", "");
    r.pd = j.at("pd").get<std::string>();
    r.crossings = j.at("crossings").get<int>();
    r.components = j.at("components").get<int>();
    r.jones = j.at("jones").get<std::string>();
    r.alexander = get_optional<std::string>(j, "alexander");
    r.determinant = get_optional<std::string>(j, "determinant");
    r.s = get_optional<int>(j, "s");
    r.kh = j.at("kh");
    r.created = j.value("created", "");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSyntax, std::string("bad invariant record: ") + e.what());
  }
}

InvariantRecord compute_record(const diagram::PlanarDiagram& d, const std::string& name, int max_crossings) {
  InvariantRecord r;
  r.key = diagram::canonical_key(d);
  r.name = name;
  r.pd = diagram::to_pd_text(d);
  r.crossings = d.crossing_count();
  r.components = d.counts().components;
  r.jones = jones::jones(d).to_string();
  const khovanov::BigradedDims kh = khovanov::khovanov_homology(d, max_crossings);
  r.kh = kh.to_json();
  if (r.components == 1) {
    r.alexander = jones::alexander(d).to_string();
    r.determinant = jones::determinant(d).get_str();
    r.s = khovanov::lee_s_invariant(d, max_crossings);
  }
  r.created = utc_timestamp();
  return r;
}

}  // namespace symknot::cli
