#include "sprite/dialogue/tts.hpp"

#include <cmath>
#include <numbers>

#include "sprite/dialogue/cache.hpp"
#include "sprite/dialogue/lexicon.hpp"

namespace sprite::dialogue {

namespace {

// Tone per phoneme so the audio is recognisably tied to the text.
double tone_hz(const std::string& phoneme, const std::string& voice) {
  std::uint32_t h = 2166136261u;
  for (char c : phoneme) h = (h ^ static_cast<unsigned char>(c)) * 16777619u;
  std::uint32_t v = 0;
  for (char c : voice) v = v * 31 + static_cast<unsigned char>(c);
  return 140.0 + 10.0 * static_cast<double>(h % 24) + static_cast<double>(v % 40);
}

}  // namespace

SpeechTiming StubTts::synthesize(const std::string& text, const std::string& voice) {
  count_call();
  const Lexicon& lex = Lexicon::bundled();
  constexpr int per_phoneme = static_cast<int>(kPhonemeSeconds * kSampleRate);

  SpeechTiming t;
  t.sampleRate = kSampleRate;
  std::vector<std::int16_t> samples;
  std::size_t k = 0;
  for (const std::string& word : split_words(text)) {
    const auto phonemes = lex.pronounce(word);
    if (phonemes.empty()) continue;
    const double word_start = static_cast<double>(k) * kPhonemeSeconds;
    for (const std::string& p : phonemes) {
      t.phonemes.push_back({p, static_cast<double>(k) * kPhonemeSeconds, static_cast<double>(k + 1) * kPhonemeSeconds});
      const double f = tone_hz(p, voice);
      for (int s = 0; s < per_phoneme; ++s) {
        const double x = std::sin(2.0 * std::numbers::pi * f * s / kSampleRate);
        samples.push_back(static_cast<std::int16_t>(std::lround(2000.0 * x)));
      }
      ++k;
    }
    t.words.push_back({word, word_start, static_cast<double>(k) * kPhonemeSeconds});
  }
  t.duration = static_cast<double>(k) * kPhonemeSeconds;
  t.audio = std::make_shared<const std::vector<std::uint8_t>>(encode_wav(samples, kSampleRate));
  return t;
}

SpeechTiming synthesize(const DialogueAction& action, TtsClient* tts, SpeechCache* cache, const std::string& voice) {
  const std::string text = action.speech_text();
  if (split_words(text).empty()) return empty_timing();

  const std::string key = SpeechCache::key(voice, text);
  if (cache) {
    if (auto hit = cache->load(key)) return std::move(*hit);
  }
  if (!tts) {
    throw DialogueError(DialogueError::Kind::TtsUnavailable, key,
                        "no TTS client configured and no cached speech for \"" + text + "\"");
  }
  SpeechTiming fresh = tts->synthesize(text, voice);
  fresh.validate();
  if (cache) cache->store(key, fresh, voice, text);
  return fresh;
}

}  // namespace sprite::dialogue
