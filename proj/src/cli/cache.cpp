#include "symknot/cli/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>

#include "symknot/error.hpp"

namespace symknot::cli {

namespace fs = std::filesystem;

namespace {

class FileLock {
 public:
  FileLock(const fs::path& path, int op) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw Error(ErrorKind::InvalidArgument, "cannot open lock " + path.string() + ": " + std::strerror(errno));
    while (::flock(fd_, op) != 0) {
      if (errno != EINTR) {
        ::close(fd_);
        throw Error(ErrorKind::InvalidArgument, "cannot lock " + path.string() + ": " + std::strerror(errno));
      }
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

InvariantCache::InvariantCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error(ErrorKind::InvalidArgument, "cannot create cache directory " + dir_.string() + ": " + ec.message());
  file_ = dir_ / "invariants.jsonl";
  lock_ = dir_ / "invariants.lock";
  FileLock lock(lock_, LOCK_SH);
  load();
}

void InvariantCache::load() {
  lines_.clear();
  physical_lines_ = 0;
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++physical_lines_;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    // A torn tail from a killed writer is skipped.
    if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j["key"].is_string()) continue;
    lines_[j["key"].get<std::string>()] = line;
  }
}

std::optional<std::string> InvariantCache::get_line(const std::string& key) const {
  auto it = lines_.find(key);
  if (it == lines_.end()) return std::nullopt;
  return it->second;
}

std::optional<InvariantRecord> InvariantCache::get(const std::string& key) const {
  auto line = get_line(key);
  if (!line) return std::nullopt;
  return InvariantRecord::from_json(nlohmann::json::parse(*line));
}

bool InvariantCache::put(const InvariantRecord& record) {
  FileLock lock(lock_, LOCK_EX);
  // Another process may have written since we loaded.
  load();
  auto it = lines_.find(record.key);
  if (it != lines_.end()) {
    InvariantRecord stored = InvariantRecord::from_json(nlohmann::json::parse(it->second));
    stored.created = record.created;
    if (stored.to_json() == record.to_json()) return false;
  }
  const std::string line = record.to_json().dump();
  {
    std::ofstream out(file_, std::ios::app);
    out << line << '\n';
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write cache file " + file_.string());
  }
  lines_[record.key] = line;
  ++physical_lines_;
  if (physical_lines_ > 2 * lines_.size()) rewrite();
  return true;
}

void InvariantCache::compact() {
  FileLock lock(lock_, LOCK_EX);
  load();
  rewrite();
}

void InvariantCache::rewrite() {
  const fs::path tmp = file_.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    for (const auto& [key, l] : lines_) out << l << '\n';
  }
  fs::rename(tmp, file_);
  physical_lines_ = lines_.size();
}

std::optional<fs::path> resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv("SYMKNOT_CACHE_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

}  // namespace symknot::cli
