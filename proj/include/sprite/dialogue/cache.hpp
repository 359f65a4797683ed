#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include "sprite/dialogue/timing.hpp"

namespace sprite::dialogue {

// Content-addressed store: <dir>/<sha256(voice \0 text)>/{audio.wav, timing.json}.
class SpeechCache {
 public:
  explicit SpeechCache(std::filesystem::path dir);

  static std::string key(const std::string& voice, const std::string& text);

  bool contains(const std::string& key) const;
  // nullopt on a miss; throws DialogueError CacheCorrupt on unreadable or
  // mismatched entries.
  std::optional<SpeechTiming> load(const std::string& key) const;
  void store(const std::string& key, const SpeechTiming& timing, const std::string& voice, const std::string& text);
  std::size_t entry_count() const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  mutable std::mutex mu_;
};

std::string sha256_hex(const void* data, std::size_t size);

}  // namespace sprite::dialogue
