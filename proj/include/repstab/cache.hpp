#pragma once

#include <optional>
#include <string>

namespace repstab {

// On-disk cache. REPSTAB_CACHE overrides the configured directory; with
// neither set, caching is memory-only (the per-process registries). Writes go
// through a temp file plus rename, so concurrent writers of one key are safe.
class CacheStore {
 public:
  static CacheStore& global();

  void set_dir(std::string dir);  // from --cache-dir
  std::optional<std::string> dir() const;

  // key is a canonical encoding like "chartab/12" or "arnold_rel/7_2"
  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value) const;

 private:
  std::string configured_dir_;
};

}  // namespace repstab
