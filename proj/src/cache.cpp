#include "repstab/cache.hpp"

#include <unistd.h>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace repstab {

CacheStore& CacheStore::global() {
  static CacheStore store;
  return store;
}

void CacheStore::set_dir(std::string dir) { configured_dir_ = std::move(dir); }

std::optional<std::string> CacheStore::dir() const {
  if (const char* env = std::getenv("REPSTAB_CACHE"); env && *env) return std::string(env);
  if (!configured_dir_.empty()) return configured_dir_;
  return std::nullopt;
}

namespace {

// keys use '/' as a directory separator; everything else must stay tame
bool sane_key(const std::string& key) {
  if (key.empty() || key.front() == '/' || key.back() == '/') return false;
  for (char c : key)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
          c == '/'))
      return false;
  return key.find("..") == std::string::npos;
}

}  // namespace

std::optional<std::string> CacheStore::get(const std::string& key) const {
  auto d = dir();
  if (!d || !sane_key(key)) return std::nullopt;
  std::ifstream in(fs::path(*d) / (key + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in.good() && !in.eof()) return std::nullopt;
  return ss.str();
}

void CacheStore::put(const std::string& key, const std::string& value) const {
  auto d = dir();
  if (!d || !sane_key(key)) return;
  std::error_code ec;
  fs::path target = fs::path(*d) / (key + ".json");
  fs::create_directories(target.parent_path(), ec);
  if (ec) return;
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << value;
    if (!out.good()) {
      out.close();
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace repstab
