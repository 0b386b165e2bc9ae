#include "cache.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#ifndef POLYZETA_VERSION
#define POLYZETA_VERSION "0.0.0"
#endif

namespace polyzeta::cli {

namespace fs = std::filesystem;

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i)
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

fs::path ResultCache::default_directory() {
  if (const char* dir = std::getenv("POLYZETA_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return fs::path(xdg) / "polyzeta";
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "polyzeta";
  return ".polyzeta-cache";
}

ResultCache::ResultCache(fs::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

std::string ResultCache::key(const std::string& command, const nlohmann::json& spec) {
  return sha256_hex(command + '\n' + spec.dump() + '\n' + POLYZETA_VERSION);
}

std::optional<nlohmann::json> ResultCache::load(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::ifstream in(dir_ / (key + ".json"));
  if (!in) return std::nullopt;
  try {
    auto record = nlohmann::json::parse(in);
    if (record.contains("payload") && record.value("version", "") == POLYZETA_VERSION)
      return record["payload"];
  } catch (const nlohmann::json::exception&) {
    // A corrupt entry is treated as a miss and overwritten later.
  }
  return std::nullopt;
}

void ResultCache::store(const std::string& key, const std::string& command,
                        const nlohmann::json& spec, const nlohmann::json& payload) const {
  if (!enabled_) return;
  nlohmann::json record = {{"command", command},
                           {"spec", spec},
                           {"payload", payload},
                           {"created", utc_now()},
                           {"version", POLYZETA_VERSION}};
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const fs::path final_path = dir_ / (key + ".json");
  const fs::path tmp = dir_ / (key + ".tmp" + std::to_string(std::random_device{}()));
  {
    std::ofstream out(tmp);
    out << record.dump(2) << '\n';
    if (!out) {
      std::cerr << "warning: could not write cache entry " << tmp << '\n';
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, final_path, ec);
  if (ec) {
    std::cerr << "warning: could not finalize cache entry: " << ec.message() << '\n';
    fs::remove(tmp, ec);
  }
}

}  // namespace polyzeta::cli
