#pragma once

#include <stdexcept>
#include <string>

namespace sprite::dialogue {

class DialogueError : public std::runtime_error {
 public:
  enum class Kind {
    MalformedTag,
    UnknownTagKind,
    UnresolvedBehavior,
    LibraryFormat,
    DuplicateKey,
    TtsUnavailable,
    CacheCorrupt,
    UnknownPhoneme,
    InvalidTiming,
  };

  DialogueError(Kind kind, std::string detail, const std::string& message)
      : std::runtime_error(message), kind_(kind), detail_(std::move(detail)) {}

  Kind kind() const { return kind_; }
  // Offset for tag errors, key for library/cache errors, name or symbol otherwise.
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  std::string detail_;
};

}  // namespace sprite::dialogue
