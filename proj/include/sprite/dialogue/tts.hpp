#pragma once

#include <atomic>
#include <string>

#include "sprite/dialogue/action.hpp"
#include "sprite/dialogue/timing.hpp"

namespace sprite::dialogue {

class TtsClient {
 public:
  virtual ~TtsClient() = default;
  // Throws DialogueError TtsUnavailable on failure.
  virtual SpeechTiming synthesize(const std::string& text, const std::string& voice) = 0;
  virtual std::string describe() const = 0;
  // Completed or attempted synthesis requests.
  std::size_t calls() const { return calls_.load(); }

 protected:
  void count_call() { ++calls_; }

 private:
  std::atomic<std::size_t> calls_{0};
};

// Offline stand-in: bundled lexicon, fixed duration per phoneme, a quiet
// tone per phoneme as audio.
class StubTts : public TtsClient {
 public:
  static constexpr double kPhonemeSeconds = 0.08;
  static constexpr int kSampleRate = 16000;

  SpeechTiming synthesize(const std::string& text, const std::string& voice) override;
  std::string describe() const override { return "stub"; }
};

class SpeechCache;

// Cached speech for the action, or a fresh synthesis stored in the cache.
// Speech without words yields empty_timing() and touches neither.
// `tts` may be null for cache-only operation.
SpeechTiming synthesize(const DialogueAction& action, TtsClient* tts, SpeechCache* cache, const std::string& voice);

}  // namespace sprite::dialogue
