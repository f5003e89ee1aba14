#include "symknot/cli/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "symknot/diagram/pd_io.hpp"
#include "symknot/error.hpp"
#include "symknot/symunion/symmetric_union.hpp"

namespace symknot::cli {

namespace fs = std::filesystem;

namespace {

struct Entry {
  std::string name;
  diagram::PlanarDiagram diagram;
};

Entry entry_from_json(const nlohmann::json& j, const std::string& fallback_name) {
  if (!j.is_object()) throw Error(ErrorKind::MalformedSyntax, "catalog entry must be a JSON object");
  std::string name = j.value("name", fallback_name);
  if (j.contains("half")) return {name, symunion::build_symmetric_union(symunion::spec_from_json(j))};
  if (j.contains("pd")) return {name, diagram::parse_pd(j.at("pd").get<std::string>())};
  return {name, diagram::diagram_from_json(j)};
}

void ingest_file(const fs::path& file, InvariantCache* cache, int max_crossings, IngestResult& result) {
  auto fail = [&](const std::string& what) { result.errors.push_back(file.string() + ": " + what); };
  auto take = [&](const Entry& e) {
    InvariantRecord r;
    std::optional<InvariantRecord> hit;
    if (cache) hit = cache->get(diagram::canonical_key(e.diagram));
    if (hit && hit->name == e.name) {
      r = *hit;
    } else {
      r = compute_record(e.diagram, e.name, max_crossings);
      if (cache && cache->put(r)) ++result.appended;
    }
    result.records.push_back(std::move(r));
  };
  const std::string stem = file.stem().string();
  try {
    if (file.extension() == ".pd") {
      take({stem, diagram::read_pd_file(file.string())});
      return;
    }
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open file");
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.is_object() && j.contains("records")) {
      const auto& list = j.at("records");
      for (size_t i = 0; i < list.size(); ++i) {
        try {
          take(entry_from_json(list[i], stem + "#" + std::to_string(i)));
        } catch (const std::exception& e) {
          fail("record " + std::to_string(i) + ": " + e.what());
        }
      }
      return;
    }
    take(entry_from_json(j, stem));
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

}  // namespace

nlohmann::json IngestResult::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) recs.push_back({{"name", r.name}, {"key", r.key}, {"crossings", r.crossings}});
  return {{"count", records.size()}, {"appended", appended}, {"records", recs}, {"errors", errors}};
}

IngestResult catalog_ingest(const std::string& path, InvariantCache* cache, int max_crossings) {
  IngestResult result;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(path)) {
      if (!e.is_regular_file()) continue;
      const auto ext = e.path().extension();
      if (ext == ".pd" || ext == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) ingest_file(f, cache, max_crossings, result);
  } else if (fs::is_regular_file(path, ec)) {
    ingest_file(path, cache, max_crossings, result);
  } else {
    throw Error(ErrorKind::InvalidArgument, "catalog path '" + path + "' does not exist");
  }
  return result;
}

}  // namespace symknot::cli
