#include "sprite/dialogue/library.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sprite/dialogue/cache.hpp"

namespace sprite::dialogue {

DialogueLibrary DialogueLibrary::parse(std::string_view json_text, std::filesystem::path source) {
  using nlohmann::json;
  const std::string where = source.empty() ? "dialogue library" : source.string();

  // nlohmann keeps the last of duplicate keys, so watch the top-level keys as
  // they stream past.
  std::set<std::string> seen;
  std::string duplicate;
  json::parser_callback_t watch = [&](int depth, json::parse_event_t ev, json& parsed) {
    if (depth == 1 && ev == json::parse_event_t::key && parsed.is_string()) {
      const std::string k = parsed.get<std::string>();
      if (!seen.insert(k).second && duplicate.empty()) duplicate = k;
    }
    return true;
  };

  json doc;
  try {
    doc = json::parse(json_text, watch);
  } catch (const json::parse_error& e) {
    throw DialogueError(DialogueError::Kind::LibraryFormat, where, where + ": " + e.what());
  }
  if (!duplicate.empty()) {
    throw DialogueError(DialogueError::Kind::DuplicateKey, duplicate, where + ": duplicate key '" + duplicate + "'");
  }
  if (!doc.is_object()) {
    throw DialogueError(DialogueError::Kind::LibraryFormat, where, where + ": expected an object of key: text");
  }

  DialogueLibrary lib;
  lib.source_ = std::move(source);
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_string()) {
      throw DialogueError(DialogueError::Kind::LibraryFormat, key, where + ": entry '" + key + "' must be a string");
    }
    LibraryEntry e;
    e.text = value.get<std::string>();
    try {
      e.action = parse_dialogue(e.text);
    } catch (const DialogueError& err) {
      throw DialogueError(err.kind(), key, where + ": entry '" + key + "': " + err.what());
    }
    lib.entries_.emplace(key, std::move(e));
  }
  return lib;
}

DialogueLibrary DialogueLibrary::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DialogueError(DialogueError::Kind::LibraryFormat, path.string(), "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

const LibraryEntry* DialogueLibrary::find(const std::string& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> DialogueLibrary::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, _] : entries_) out.push_back(k);
  return out;
}

void DialogueLibrary::annotate(const SpeechCache& cache, const std::string& voice) {
  for (auto& [_, e] : entries_) {
    const std::string k = SpeechCache::key(voice, e.action.speech_text());
    if (cache.contains(k)) {
      e.cacheKey = k;
    } else {
      e.cacheKey.reset();
    }
  }
}

DialogueAction resolve(const std::string& request, const DialogueLibrary& library) {
  if (const LibraryEntry* e = library.find(request)) return e->action;
  return parse_dialogue(request);
}

}  // namespace sprite::dialogue
