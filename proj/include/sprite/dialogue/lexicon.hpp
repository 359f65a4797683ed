#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sprite::dialogue {

// ARPAbet pronunciations for the bundled test vocabulary. Words not in the
// table are spelled out, one phoneme per letter or digit.
class Lexicon {
 public:
  static const Lexicon& bundled();

  std::vector<std::string> pronounce(std::string_view word) const;
  bool contains(std::string_view word) const;
  // Every phoneme the lexicon can emit, fallback spellings included.
  std::vector<std::string> phoneme_inventory() const;
  std::size_t size() const;
};

}  // namespace sprite::dialogue
