#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

namespace sprite::dialogue {

struct TimedSymbol {
  std::string symbol;
  double start = 0.0;
  double end = 0.0;

  bool operator==(const TimedSymbol&) const = default;
};

struct SpeechTiming {
  // Encoded audio file (WAV), shared because timelines and caches pass it around.
  std::shared_ptr<const std::vector<std::uint8_t>> audio;
  int sampleRate = 0;
  double duration = 0.0;
  std::vector<TimedSymbol> phonemes;
  std::vector<TimedSymbol> words;

  bool empty() const { return duration == 0.0 && phonemes.empty(); }
  const std::vector<std::uint8_t>& audio_bytes() const;

  // Throws DialogueError InvalidTiming: overlapping or negative intervals,
  // phonemes past the audio end, word edges off phoneme edges.
  void validate() const;
};

SpeechTiming empty_timing();

// Timing marks only; the audio travels separately.
nlohmann::json timing_to_json(const SpeechTiming& t);
SpeechTiming timing_from_json(const nlohmann::json& j, std::shared_ptr<const std::vector<std::uint8_t>> audio);

// 16-bit mono PCM.
std::vector<std::uint8_t> encode_wav(const std::vector<std::int16_t>& samples, int sample_rate);

}  // namespace sprite::dialogue
