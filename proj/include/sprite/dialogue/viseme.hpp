#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sprite/common/face.hpp"
#include "sprite/dialogue/timing.hpp"

namespace sprite::dialogue {

struct VisemeEvent {
  double t = 0.0;
  face::Viseme viseme = face::Viseme::Sil;

  bool operator==(const VisemeEvent&) const = default;
};

// ARPAbet symbol (stress digits ignored) to mouth shape; nullopt if unknown.
std::optional<face::Viseme> viseme_for_phoneme(std::string_view phoneme);

// One event per phoneme, consecutive repeats merged, a sil at every gap
// between phonemes and a closing sil at the audio end.
// Throws DialogueError UnknownPhoneme.
std::vector<VisemeEvent> phonemes_to_visemes(const SpeechTiming& timing);

}  // namespace sprite::dialogue
