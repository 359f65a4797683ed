#include "sprite/dialogue/action.hpp"

#include <cctype>

namespace sprite::dialogue {

namespace {

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '\''; }

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

[[noreturn]] void malformed(std::size_t offset, const std::string& why) {
  throw DialogueError(DialogueError::Kind::MalformedTag, std::to_string(offset),
                      "malformed tag at offset " + std::to_string(offset) + ": " + why);
}

void append_speech(std::string& out, const std::string& text) {
  if (text.empty()) return;
  if (!out.empty() && word_char(out.back()) && word_char(text.front())) out += ' ';
  out += text;
}

}  // namespace

std::string_view to_string(BehaviorKind k) {
  switch (k) {
    case BehaviorKind::Animation: return "anim";
    case BehaviorKind::Expression: return "expr";
    case BehaviorKind::Gaze: return "gaze";
  }
  return "?";
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && !word_char(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && word_char(text[i])) ++i;
    if (i > start) words.emplace_back(text.substr(start, i - start));
  }
  return words;
}

std::string DialogueAction::speech_text() const {
  std::string out;
  for (const Segment& s : segments) {
    if (const auto* sp = std::get_if<SpeechText>(&s)) append_speech(out, sp->text);
  }
  return out;
}

std::vector<BehaviorTag> DialogueAction::tags() const {
  std::vector<BehaviorTag> out;
  for (const Segment& s : segments) {
    if (const auto* t = std::get_if<BehaviorTag>(&s)) out.push_back(*t);
  }
  return out;
}

DialogueAction parse_dialogue(std::string_view text) {
  DialogueAction action;
  std::string spoken;
  std::string pending;
  auto flush = [&] {
    if (pending.empty()) return;
    append_speech(spoken, pending);
    action.segments.emplace_back(SpeechText{std::move(pending)});
    pending.clear();
  };

  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '<') {
      pending += text[i++];
      continue;
    }
    const std::size_t open = i;
    const std::size_t close = text.find('>', open + 1);
    if (close == std::string_view::npos) malformed(open, "missing '>'");
    const std::string_view body = text.substr(open + 1, close - open - 1);
    if (body.find('<') != std::string_view::npos) malformed(open, "nested '<'");
    const std::size_t colon = body.find(':');
    if (colon == std::string_view::npos) malformed(open, "expected <kind:name>");

    const std::string kind = trim(body.substr(0, colon));
    BehaviorTag tag;
    if (kind == "anim" || kind == "animation") {
      tag.kind = BehaviorKind::Animation;
    } else if (kind == "expr" || kind == "expression") {
      tag.kind = BehaviorKind::Expression;
    } else if (kind == "gaze") {
      tag.kind = BehaviorKind::Gaze;
    } else if (kind.empty()) {
      malformed(open, "empty tag kind");
    } else {
      throw DialogueError(DialogueError::Kind::UnknownTagKind, std::to_string(open),
                          "unknown tag kind '" + kind + "' at offset " + std::to_string(open));
    }

    std::string_view rest = body.substr(colon + 1);
    const std::size_t paren = rest.find('(');
    tag.name = trim(rest.substr(0, paren));
    if (tag.name.empty()) malformed(open, "empty tag name");
    for (char c : tag.name) {
      if (!name_char(c)) malformed(open, "bad character in tag name");
    }
    if (paren != std::string_view::npos) {
      std::string_view args = rest.substr(paren + 1);
      const std::string tail = trim(args);
      if (tail.empty() || tail.back() != ')') malformed(open, "missing ')'");
      args = std::string_view(tail).substr(0, tail.size() - 1);
      const std::string inner = trim(args);
      if (inner.find_first_of("()") != std::string::npos) malformed(open, "unbalanced parentheses");
      if (!inner.empty()) {
        std::size_t a = 0;
        for (;;) {
          const std::size_t comma = inner.find(',', a);
          const std::string arg = trim(std::string_view(inner).substr(a, comma - a));
          if (arg.empty()) malformed(open, "empty argument");
          tag.args.push_back(arg);
          if (comma == std::string::npos) break;
          a = comma + 1;
        }
      }
    }

    flush();
    tag.anchorWord = split_words(spoken).size();
    action.segments.emplace_back(std::move(tag));
    i = close + 1;
  }
  flush();
  return action;
}

std::string format_dialogue(const DialogueAction& action) {
  std::string out;
  for (const Segment& s : action.segments) {
    if (const auto* sp = std::get_if<SpeechText>(&s)) {
      out += sp->text;
      continue;
    }
    const auto& t = std::get<BehaviorTag>(s);
    out += '<';
    out += to_string(t.kind);
    out += ':';
    out += t.name;
    if (!t.args.empty()) {
      out += '(';
      for (std::size_t k = 0; k < t.args.size(); ++k) {
        if (k) out += ", ";
        out += t.args[k];
      }
      out += ')';
    }
    out += '>';
  }
  return out;
}

}  // namespace sprite::dialogue
