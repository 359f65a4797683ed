#include "sprite/dialogue/http_tts.hpp"

#include <openssl/evp.h>

#include "httplib.h"
#include "json.hpp"

namespace sprite::dialogue {

namespace {

[[noreturn]] void unavailable(const std::string& endpoint, const std::string& why) {
  throw DialogueError(DialogueError::Kind::TtsUnavailable, endpoint, "TTS at " + endpoint + ": " + why);
}

}  // namespace

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3), '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()), bytes.data(), static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
  if (text.size() % 4 != 0) throw std::invalid_argument("base64 length is not a multiple of 4");
  std::vector<std::uint8_t> out(3 * text.size() / 4);
  const int n = EVP_DecodeBlock(out.data(), reinterpret_cast<const unsigned char*>(text.data()), static_cast<int>(text.size()));
  if (n < 0) throw std::invalid_argument("invalid base64");
  // DecodeBlock counts the padding bytes as data.
  std::size_t pad = 0;
  if (!text.empty() && text.back() == '=') ++pad;
  if (text.size() > 1 && text[text.size() - 2] == '=') ++pad;
  out.resize(static_cast<std::size_t>(n) - pad);
  return out;
}

HttpTtsClient::HttpTtsClient(std::string endpoint, std::chrono::milliseconds timeout)
    : endpoint_(std::move(endpoint)), timeout_(timeout) {
  const std::string scheme = "http://";
  if (endpoint_.rfind(scheme, 0) != 0) throw std::invalid_argument("TTS endpoint must start with http://: " + endpoint_);
  const std::size_t slash = endpoint_.find('/', scheme.size());
  host_ = endpoint_.substr(0, slash);
  base_path_ = slash == std::string::npos ? "" : endpoint_.substr(slash);
  while (!base_path_.empty() && base_path_.back() == '/') base_path_.pop_back();
}

SpeechTiming HttpTtsClient::synthesize(const std::string& text, const std::string& voice) {
  count_call();
  httplib::Client cli(host_);
  cli.set_connection_timeout(timeout_);
  cli.set_read_timeout(timeout_);
  const std::string body = nlohmann::json{{"text", text}, {"voice", voice}}.dump();
  const auto res = cli.Post(base_path_ + "/synthesize", body, "application/json");
  if (!res) unavailable(endpoint_, "request failed: " + httplib::to_string(res.error()));
  if (res->status != 200) unavailable(endpoint_, "HTTP status " + std::to_string(res->status));

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::parse_error& e) {
    unavailable(endpoint_, std::string("response is not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("audio") || !doc["audio"].is_string()) {
    unavailable(endpoint_, "response lacks base64 'audio'");
  }
  try {
    auto audio = std::make_shared<const std::vector<std::uint8_t>>(base64_decode(doc["audio"].get<std::string>()));
    return timing_from_json(doc, std::move(audio));
  } catch (const std::exception& e) {
    unavailable(endpoint_, std::string("bad response: ") + e.what());
  }
}

}  // namespace sprite::dialogue
