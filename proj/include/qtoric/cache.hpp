#ifndef QTORIC_CACHE_HPP
#define QTORIC_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "qtoric/render.hpp"

namespace qtoric {

// Bumping this invalidates every stored entry.
inline constexpr int kCacheFormat = 1;

// Directory of JSON entries, one file per key. Writes go to a temporary
// file in the same directory and are renamed into place.
class ReportCache {
public:
  explicit ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // QTORIC_CACHE_DIR, else $XDG_CACHE_HOME/qtoric, else $HOME/.cache/qtoric.
  static std::optional<std::filesystem::path> default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry_path(const Json& key) const;

  // Missing entry: nullopt, no warning. Unreadable, corrupt, stale or
  // colliding entry: nullopt and a warning describing why.
  std::optional<Json> load(const Json& key, std::string* warning = nullptr) const;
  // Returns false (with a warning) when the directory is not writable.
  bool store(const Json& key, const Json& payload, std::string* warning = nullptr) const;

private:
  std::filesystem::path dir_;
};

} // namespace qtoric

#endif
