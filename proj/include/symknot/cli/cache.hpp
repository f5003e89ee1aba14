#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "symknot/cli/record.hpp"

namespace symknot::cli {

// JSON-lines store under one directory. Writers take an exclusive flock on a
// sibling lock file; the last line for a key wins and the file is rewritten
// once it holds twice as many lines as live records.
class InvariantCache {
 public:
  explicit InvariantCache(std::filesystem::path dir);

  // The stored line for `key`, exactly as written.
  std::optional<std::string> get_line(const std::string& key) const;
  std::optional<InvariantRecord> get(const std::string& key) const;
  // Appends unless an identical record is already stored. Returns true on append.
  bool put(const InvariantRecord& record);
  size_t size() const { return lines_.size(); }
  void compact();

  const std::filesystem::path& file() const { return file_; }

 private:
  void load();
  // Caller holds the exclusive lock.
  void rewrite();

  std::filesystem::path dir_;
  std::filesystem::path file_;
  std::filesystem::path lock_;
  std::map<std::string, std::string> lines_;
  size_t physical_lines_ = 0;
};

// --cache-dir, else SYMKNOT_CACHE_DIR, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag);

}  // namespace symknot::cli
