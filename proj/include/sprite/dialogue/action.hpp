#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sprite/dialogue/error.hpp"

namespace sprite::dialogue {

enum class BehaviorKind { Animation, Expression, Gaze };

std::string_view to_string(BehaviorKind k);

struct SpeechText {
  std::string text;
  bool operator==(const SpeechText&) const = default;
};

struct BehaviorTag {
  BehaviorKind kind = BehaviorKind::Animation;
  std::string name;
  std::vector<std::string> args;
  // Index of the spoken word this tag precedes; equal to the word count when
  // the tag trails all speech.
  std::size_t anchorWord = 0;

  bool operator==(const BehaviorTag&) const = default;
};

using Segment = std::variant<SpeechText, BehaviorTag>;

struct DialogueAction {
  std::vector<Segment> segments;

  // Speech segments joined; a space is inserted where a tag split a word.
  std::string speech_text() const;
  std::vector<BehaviorTag> tags() const;

  bool operator==(const DialogueAction&) const = default;
};

// Words as the TTS layer sees them: runs of letters, digits and apostrophes.
std::vector<std::string> split_words(std::string_view text);

// Text with inline tags <kind:name> or <kind:name(arg, ...)>, kind one of
// anim|animation, expr|expression, gaze. Every '<' opens a tag.
// Throws DialogueError MalformedTag / UnknownTagKind with the byte offset of
// the opening '<' as detail.
DialogueAction parse_dialogue(std::string_view text);

// Inverse of parse_dialogue for display and library files.
std::string format_dialogue(const DialogueAction& action);

}  // namespace sprite::dialogue
