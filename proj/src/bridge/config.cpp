#include "sprite/bridge/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "sprite/bridge/face_command.hpp"

namespace sprite::bridge {

namespace fs = std::filesystem;

namespace {

fs::path default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "sprite" / "speech";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "sprite" / "speech";
  return fs::temp_directory_path() / "sprite-speech";
}

}  // namespace

BridgeConfig default_config(const fs::path& root) {
  BridgeConfig c;
  c.geometry = root / "config" / "sprite-default.geometry.json";
  c.clipDir = root / "clips";
  c.library = root / "dialogue" / "library.json";
  c.cacheDir = default_cache_dir();
  return c;
}

BridgeConfig load_config(const fs::path& path, BridgeConfig c) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw std::runtime_error(path.string() + ": config must be a JSON object");
  const fs::path dir = path.parent_path();
  auto rel = [&](const nlohmann::json& v) {
    const fs::path p = v.get<std::string>();
    return p.is_absolute() ? p : dir / p;
  };
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "geometry") c.geometry = rel(v);
      else if (key == "clip_dir") c.clipDir = rel(v);
      else if (key == "library") c.library = rel(v);
      else if (key == "expressions") c.expressions = rel(v);
      else if (key == "cache_dir") c.cacheDir = rel(v);
      else if (key == "tts_endpoint") c.ttsEndpoint = v.get<std::string>();
      else if (key == "voice") c.voice = v.get<std::string>();
      else if (key == "bind_address") c.bindAddress = v.get<std::string>();
      else if (key == "port") c.port = v.get<unsigned short>();
      else if (key == "robots") c.robots = v.get<std::vector<std::string>>();
      else throw std::runtime_error("unknown key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  for (const auto& r : c.robots) {
    if (!is_valid_robot_id(r)) throw std::runtime_error(path.string() + ": bad robot id '" + r + "'");
  }
  return c;
}

std::optional<std::string> process_env(const char* name) {
  const char* v = std::getenv(name);
  if (!v) return std::nullopt;
  return std::string(v);
}

void apply_env(BridgeConfig& cfg, const EnvLookup& env) {
  if (auto v = env("SPRITE_TTS_ENDPOINT")) cfg.ttsEndpoint = *v;
  if (auto v = env("SPRITE_CACHE_DIR"); v && !v->empty()) cfg.cacheDir = *v;
}

}  // namespace sprite::bridge
