#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sprite/dialogue/action.hpp"

namespace sprite::dialogue {

class SpeechCache;

struct LibraryEntry {
  std::string text;
  DialogueAction action;
  // Cache key of the synthesized speech, when present in the cache.
  std::optional<std::string> cacheKey;
};

// JSON object { key: dialogue text }. Duplicate keys are a load error.
class DialogueLibrary {
 public:
  DialogueLibrary() = default;

  static DialogueLibrary parse(std::string_view json_text, std::filesystem::path source = {});
  static DialogueLibrary load(const std::filesystem::path& path);

  const LibraryEntry* find(const std::string& key) const;
  std::vector<std::string> keys() const;
  std::size_t size() const { return entries_.size(); }
  const std::filesystem::path& source() const { return source_; }

  // Fills cacheKey for every entry whose speech is already cached.
  void annotate(const SpeechCache& cache, const std::string& voice);

 private:
  std::map<std::string, LibraryEntry> entries_;
  std::filesystem::path source_;
};

// Library entry when the request is a key, otherwise the request parsed as
// inline dialogue.
DialogueAction resolve(const std::string& request, const DialogueLibrary& library);

}  // namespace sprite::dialogue
