#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace polyzeta::cli {

/// Content-addressed store of JSON job records, one file per key.
class ResultCache {
 public:
  /// Directory from POLYZETA_CACHE_DIR, else $XDG_CACHE_HOME/polyzeta, else
  /// ~/.cache/polyzeta, else ./.polyzeta-cache.
  static std::filesystem::path default_directory();

  ResultCache(std::filesystem::path dir, bool enabled);

  /// SHA-256 (hex) of the command name, the canonical spec dump and the
  /// artifact version.
  static std::string key(const std::string& command, const nlohmann::json& spec);

  std::optional<nlohmann::json> load(const std::string& key) const;
  /// Writes {command, spec, payload, created, version} via a temporary file
  /// and rename. Failures are reported on stderr and otherwise ignored.
  void store(const std::string& key, const std::string& command, const nlohmann::json& spec,
             const nlohmann::json& payload) const;

  bool enabled() const { return enabled_; }

 private:
  std::filesystem::path dir_;
  bool enabled_;
};

}  // namespace polyzeta::cli
