#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symknot/cli/cache.hpp"

namespace symknot::cli {

struct IngestResult {
  std::vector<InvariantRecord> records;
  // "<file>: <message>" per entry that failed.
  std::vector<std::string> errors;
  size_t appended = 0;

  nlohmann::json to_json() const;
};

// `path` is a directory of .pd and .json files, or a single JSON file. A JSON
// file holds one diagram ({"crossings": ...}), one symmetric union
// ({"half": ..., "twists": ...}) or several under {"records": [...]} where
// each entry may also be {"pd": "PD[...]"}. Bad entries are collected.
IngestResult catalog_ingest(const std::string& path, InvariantCache* cache, int max_crossings);

}  // namespace symknot::cli
