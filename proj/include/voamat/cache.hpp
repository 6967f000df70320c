// Persistent cache of computed blocks, keyed by a configuration fingerprint.
// Entries are JSON files carrying both the configuration hash and a content
// hash of the payload; mismatches (stale configuration, truncated or corrupt
// files) are treated as misses and recomputed. Publishing is atomic:
// write to a unique temporary file in the cache directory, then rename, so
// concurrent writers converge to one valid entry.
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>

#include "voamat/serialize.hpp"

namespace voamat {

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class BlockCache {
 public:
  // Empty directory disables the cache entirely.
  BlockCache(std::string dir, const std::string& config_key)
      : dir_(std::move(dir)), config_hash_(hex64(fnv1a64(config_key))) {
    if (enabled()) std::filesystem::create_directories(dir_);
  }

  bool enabled() const { return !dir_.empty(); }
  const std::string& config_hash() const { return config_hash_; }

  // Returns the payload on a clean hit. Stale or corrupt entries return
  // nullopt; corrupt ones additionally set *warning.
  std::optional<Json> load(const std::string& name, std::string* warning = nullptr) const {
    if (!enabled()) return std::nullopt;
    auto p = path_of(name);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    try {
      Json j = Json::parse(in);
      if (j.at("config_hash").get<std::string>() != config_hash_) return std::nullopt;
      Json payload = j.at("payload");
      if (hex64(fnv1a64(payload.dump())) != j.at("payload_hash").get<std::string>()) {
        if (warning) *warning = "cache entry " + p.string() + " failed its content hash; recomputing";
        return std::nullopt;
      }
      return payload;
    } catch (const std::exception& e) {
      if (warning) *warning = "cache entry " + p.string() + " is corrupt (" + e.what() + "); recomputing";
      return std::nullopt;
    }
  }

  void store(const std::string& name, const Json& payload) const {
    if (!enabled()) return;
    Json j{{"config_hash", config_hash_},
           {"payload_hash", hex64(fnv1a64(payload.dump()))},
           {"payload", payload}};
    auto final_path = path_of(name);
    std::random_device rd;
    auto tmp = final_path;
    tmp += ".tmp" + std::to_string(rd()) + std::to_string(rd());
    {
      std::ofstream out(tmp);
      if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
      out << j.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, final_path);
  }

 private:
  std::filesystem::path path_of(const std::string& name) const {
    return std::filesystem::path(dir_) / (name + "-" + config_hash_ + ".json");
  }

  std::string dir_;
  std::string config_hash_;
};

}  // namespace voamat
