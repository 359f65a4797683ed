#include "sprite/dialogue/viseme.hpp"

#include <cctype>
#include <map>
#include <string>

#include "sprite/dialogue/error.hpp"

namespace sprite::dialogue {

namespace {

using face::Viseme;

const std::map<std::string, Viseme, std::less<>>& table() {
  static const std::map<std::string, Viseme, std::less<>> t = {
      {"P", Viseme::PP},   {"B", Viseme::PP},   {"M", Viseme::PP},   {"F", Viseme::FF},   {"V", Viseme::FF},
      {"TH", Viseme::TH},  {"DH", Viseme::TH},  {"T", Viseme::DD},   {"D", Viseme::DD},   {"K", Viseme::kk},
      {"G", Viseme::kk},   {"HH", Viseme::kk},  {"CH", Viseme::CH},  {"JH", Viseme::CH},  {"SH", Viseme::CH},
      {"ZH", Viseme::CH},  {"S", Viseme::SS},   {"Z", Viseme::SS},   {"N", Viseme::nn},   {"L", Viseme::nn},
      {"NG", Viseme::nn},  {"R", Viseme::RR},   {"ER", Viseme::RR},  {"AA", Viseme::aa},  {"AE", Viseme::aa},
      {"AH", Viseme::aa},  {"AY", Viseme::aa},  {"AW", Viseme::aa},  {"EH", Viseme::E},   {"EY", Viseme::E},
      {"IH", Viseme::ih},  {"IY", Viseme::ih},  {"Y", Viseme::ih},   {"AO", Viseme::oh},  {"OW", Viseme::oh},
      {"OY", Viseme::oh},  {"UH", Viseme::ou},  {"UW", Viseme::ou},  {"W", Viseme::ou},   {"SIL", Viseme::Sil},
      {"SP", Viseme::Sil}, {"PAU", Viseme::Sil},
  };
  return t;
}

}  // namespace

std::optional<face::Viseme> viseme_for_phoneme(std::string_view phoneme) {
  std::string key;
  for (char c : phoneme) {
    if (std::isdigit(static_cast<unsigned char>(c))) continue;
    key += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  const auto it = table().find(key);
  if (it == table().end()) return std::nullopt;
  return it->second;
}

std::vector<VisemeEvent> phonemes_to_visemes(const SpeechTiming& timing) {
  std::vector<VisemeEvent> out;
  auto emit = [&](double t, Viseme v) {
    if (!out.empty() && out.back().viseme == v) return;
    out.push_back({t, v});
  };
  double last_end = 0.0;
  for (const TimedSymbol& p : timing.phonemes) {
    const auto v = viseme_for_phoneme(p.symbol);
    if (!v) {
      throw DialogueError(DialogueError::Kind::UnknownPhoneme, p.symbol, "no viseme for phoneme '" + p.symbol + "'");
    }
    if (p.start > last_end) emit(last_end, Viseme::Sil);
    emit(p.start, *v);
    last_end = p.end;
  }
  emit(timing.duration, Viseme::Sil);
  return out;
}

}  // namespace sprite::dialogue
