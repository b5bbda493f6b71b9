#include "qtoric/cache.hpp"

#include "qtoric/fanfile.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace qtoric {

namespace fs = std::filesystem;

std::optional<fs::path> ReportCache::default_dir() {
  if (const char* d = std::getenv("QTORIC_CACHE_DIR"); d && *d)
    return fs::path(d);
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d)
    return fs::path(d) / "qtoric";
  if (const char* d = std::getenv("HOME"); d && *d)
    return fs::path(d) / ".cache" / "qtoric";
  return std::nullopt;
}

fs::path ReportCache::entry_path(const Json& key) const {
  std::string name = key.value("command", std::string("entry"));
  return dir_ / (name + "-" + fnv1a_hex(key.dump()) + ".json");
}

std::optional<Json> ReportCache::load(const Json& key, std::string* warning) const {
  const fs::path path = entry_path(key);
  std::error_code ec;
  if (!fs::exists(path, ec))
    return std::nullopt;
  auto warn = [&](const std::string& why) -> std::optional<Json> {
    if (warning)
      *warning = "cache entry " + path.string() + " " + why + "; recomputing";
    return std::nullopt;
  };
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return warn("is unreadable");
  std::stringstream ss;
  ss << in.rdbuf();
  Json doc = Json::parse(ss.str(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    return warn("is corrupt");
  auto fmt = doc.find("format");
  if (fmt == doc.end() || !fmt->is_number_integer())
    return warn("is corrupt");
  if (fmt->get<int>() != kCacheFormat)
    return warn("has an old format");
  auto k = doc.find("key");
  auto p = doc.find("payload");
  if (k == doc.end() || p == doc.end() || !p->is_object())
    return warn("is corrupt");
  if (*k != key)
    return warn("belongs to a different key");
  return *p;
}

bool ReportCache::store(const Json& key, const Json& payload, std::string* warning) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const fs::path path = entry_path(key);
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid()) + "." +
                       std::to_string(counter++);
  Json doc;
  doc["format"] = kCacheFormat;
  doc["key"] = key;
  doc["payload"] = payload;
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << doc.dump() << "\n";
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      if (warning)
        *warning = "cannot write cache entry under " + dir_.string();
      return false;
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    if (warning)
      *warning = "cannot install cache entry " + path.string();
    return false;
  }
  return true;
}

} // namespace qtoric
