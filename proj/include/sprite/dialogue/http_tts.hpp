#pragma once

#include <chrono>
#include <string>

#include "sprite/dialogue/tts.hpp"

namespace sprite::dialogue {

// POST <endpoint>/synthesize with {"text", "voice"}; the response carries
// base64 WAV audio and phoneme/word marks (see docs/tts-http.md).
class HttpTtsClient : public TtsClient {
 public:
  explicit HttpTtsClient(std::string endpoint, std::chrono::milliseconds timeout = std::chrono::seconds(10));

  SpeechTiming synthesize(const std::string& text, const std::string& voice) override;
  std::string describe() const override { return endpoint_; }

 private:
  std::string endpoint_;
  std::string host_;
  std::string base_path_;
  std::chrono::milliseconds timeout_;
};

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> base64_decode(const std::string& text);

}  // namespace sprite::dialogue
