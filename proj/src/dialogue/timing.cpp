#include "sprite/dialogue/timing.hpp"

#include <cmath>

#include "sprite/dialogue/error.hpp"

namespace sprite::dialogue {

namespace {

[[noreturn]] void invalid(const std::string& why) {
  throw DialogueError(DialogueError::Kind::InvalidTiming, why, "invalid speech timing: " + why);
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

std::vector<TimedSymbol> marks_from_json(const nlohmann::json& j, const char* field, const char* name_key) {
  std::vector<TimedSymbol> out;
  if (!j.contains(field)) return out;
  if (!j[field].is_array()) invalid(std::string(field) + " must be an array");
  for (const auto& m : j[field]) {
    if (!m.is_object() || !m.contains(name_key) || !m[name_key].is_string() || !m.contains("start") ||
        !m["start"].is_number() || !m.contains("end") || !m["end"].is_number()) {
      invalid(std::string("bad entry in ") + field);
    }
    out.push_back({m[name_key].get<std::string>(), m["start"].get<double>(), m["end"].get<double>()});
  }
  return out;
}

}  // namespace

const std::vector<std::uint8_t>& SpeechTiming::audio_bytes() const {
  static const std::vector<std::uint8_t> none;
  return audio ? *audio : none;
}

void SpeechTiming::validate() const {
  constexpr double eps = 1e-9;
  if (!std::isfinite(duration) || duration < 0.0) invalid("duration must be finite and non-negative");
  double last = 0.0;
  for (const auto& p : phonemes) {
    if (!std::isfinite(p.start) || !std::isfinite(p.end) || p.start < 0.0 || p.end < p.start) {
      invalid("phoneme '" + p.symbol + "' has a bad interval");
    }
    if (p.start < last - eps) invalid("phoneme '" + p.symbol + "' overlaps its predecessor");
    last = p.end;
  }
  if (last > duration + eps) invalid("phonemes run past the audio end");
  auto on_edge = [&](double t) {
    if (std::abs(t - duration) <= eps || t <= eps) return true;
    for (const auto& p : phonemes) {
      if (std::abs(p.start - t) <= eps || std::abs(p.end - t) <= eps) return true;
    }
    return false;
  };
  double wlast = 0.0;
  for (const auto& w : words) {
    if (!std::isfinite(w.start) || !std::isfinite(w.end) || w.start < wlast - eps || w.end < w.start) {
      invalid("word '" + w.symbol + "' has a bad interval");
    }
    if (!on_edge(w.start) || !on_edge(w.end)) invalid("word '" + w.symbol + "' does not sit on phoneme boundaries");
    wlast = w.end;
  }
}

SpeechTiming empty_timing() {
  SpeechTiming t;
  t.sampleRate = 16000;
  t.audio = std::make_shared<const std::vector<std::uint8_t>>(encode_wav({}, t.sampleRate));
  return t;
}

nlohmann::json timing_to_json(const SpeechTiming& t) {
  nlohmann::json j;
  j["sample_rate"] = t.sampleRate;
  j["duration"] = t.duration;
  j["phonemes"] = nlohmann::json::array();
  for (const auto& p : t.phonemes) j["phonemes"].push_back({{"symbol", p.symbol}, {"start", p.start}, {"end", p.end}});
  j["words"] = nlohmann::json::array();
  for (const auto& w : t.words) j["words"].push_back({{"word", w.symbol}, {"start", w.start}, {"end", w.end}});
  return j;
}

SpeechTiming timing_from_json(const nlohmann::json& j, std::shared_ptr<const std::vector<std::uint8_t>> audio) {
  if (!j.is_object() || !j.contains("duration") || !j["duration"].is_number()) invalid("missing duration");
  SpeechTiming t;
  t.audio = std::move(audio);
  t.sampleRate = j.value("sample_rate", 0);
  t.duration = j["duration"].get<double>();
  t.phonemes = marks_from_json(j, "phonemes", "symbol");
  t.words = marks_from_json(j, "words", "word");
  t.validate();
  return t;
}

std::vector<std::uint8_t> encode_wav(const std::vector<std::int16_t>& samples, int sample_rate) {
  std::vector<std::uint8_t> out;
  const auto data_bytes = static_cast<std::uint32_t>(samples.size() * 2);
  out.reserve(44 + data_bytes);
  for (char c : std::string("RIFF")) out.push_back(static_cast<std::uint8_t>(c));
  put_u32(out, 36 + data_bytes);
  for (char c : std::string("WAVEfmt ")) out.push_back(static_cast<std::uint8_t>(c));
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(sample_rate));
  put_u32(out, static_cast<std::uint32_t>(sample_rate * 2));
  put_u16(out, 2);
  put_u16(out, 16);
  for (char c : std::string("data")) out.push_back(static_cast<std::uint8_t>(c));
  put_u32(out, data_bytes);
  for (std::int16_t s : samples) put_u16(out, static_cast<std::uint16_t>(s));
  return out;
}

}  // namespace sprite::dialogue
