#include "sprite/dialogue/cache.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "sprite/dialogue/error.hpp"

namespace sprite::dialogue {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void corrupt(const std::string& key, const std::string& why) {
  throw DialogueError(DialogueError::Kind::CacheCorrupt, key, "cache entry " + key + ": " + why);
}

void write_atomically(const fs::path& target, const void* data, std::size_t size) {
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace

std::string sha256_hex(const void* data, std::size_t size) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data, size, digest, &len, EVP_sha256(), nullptr) != 1) throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

SpeechCache::SpeechCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::string SpeechCache::key(const std::string& voice, const std::string& text) {
  std::string material = voice;
  material += '\0';
  material += text;
  return sha256_hex(material.data(), material.size());
}

bool SpeechCache::contains(const std::string& key) const { return fs::exists(dir_ / key / "timing.json"); }

std::optional<SpeechTiming> SpeechCache::load(const std::string& key) const {
  std::lock_guard lock(mu_);
  const fs::path entry = dir_ / key;
  if (!fs::exists(entry)) return std::nullopt;
  std::ifstream tin(entry / "timing.json");
  if (!tin) corrupt(key, "missing timing.json");
  std::ifstream ain(entry / "audio.wav", std::ios::binary);
  if (!ain) corrupt(key, "missing audio.wav");
  auto audio = std::make_shared<std::vector<std::uint8_t>>(std::istreambuf_iterator<char>(ain),
                                                           std::istreambuf_iterator<char>());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(tin);
  } catch (const nlohmann::json::parse_error& e) {
    corrupt(key, std::string("unreadable timing.json: ") + e.what());
  }
  if (!doc.is_object() || doc.value("key", "") != key) corrupt(key, "timing.json belongs to another entry");
  if (doc.value("audio_sha256", "") != sha256_hex(audio->data(), audio->size())) corrupt(key, "audio hash mismatch");
  try {
    return timing_from_json(doc, std::move(audio));
  } catch (const DialogueError& e) {
    corrupt(key, e.what());
  }
}

void SpeechCache::store(const std::string& key, const SpeechTiming& timing, const std::string& voice,
                        const std::string& text) {
  std::lock_guard lock(mu_);
  const fs::path entry = dir_ / key;
  fs::create_directories(entry);
  const auto& audio = timing.audio_bytes();
  nlohmann::json doc = timing_to_json(timing);
  doc["format"] = "sprite-speech";
  doc["version"] = 1;
  doc["key"] = key;
  doc["voice"] = voice;
  doc["text"] = text;
  doc["audio_sha256"] = sha256_hex(audio.data(), audio.size());
  const std::string js = doc.dump(2) + "\n";
  // Audio first: a timing file only ever points at complete audio.
  write_atomically(entry / "audio.wav", audio.data(), audio.size());
  write_atomically(entry / "timing.json", js.data(), js.size());
}

std::size_t SpeechCache::entry_count() const {
  std::size_t n = 0;
  if (!fs::exists(dir_)) return 0;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.is_directory() && fs::exists(e.path() / "timing.json")) ++n;
  }
  return n;
}

}  // namespace sprite::dialogue
