#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sprite::bridge {

struct BridgeConfig {
  std::filesystem::path geometry;
  std::filesystem::path clipDir;
  std::filesystem::path library;
  std::filesystem::path expressions;  // empty: built-in set
  std::filesystem::path cacheDir;
  std::string ttsEndpoint;  // empty: offline stub voice
  std::string voice = "default";
  std::string bindAddress = "127.0.0.1";
  unsigned short port = 8765;
  std::vector<std::string> robots{"sprite"};
};

// Paths relative to `root` (the repository data).
BridgeConfig default_config(const std::filesystem::path& root);

// JSON file; relative paths resolve against the file's directory. Unknown
// keys are an error.
BridgeConfig load_config(const std::filesystem::path& path, BridgeConfig base);

using EnvLookup = std::function<std::optional<std::string>(const char*)>;
std::optional<std::string> process_env(const char* name);

// SPRITE_TTS_ENDPOINT and SPRITE_CACHE_DIR.
void apply_env(BridgeConfig& cfg, const EnvLookup& env = process_env);

}  // namespace sprite::bridge
