#include "sprite/dialogue/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace sprite::dialogue {

namespace {

// Pronunciations in the style of the CMU dictionary, stress marks dropped.
constexpr const char* kEntries[][2] = {
    {"a", "AH"},
    {"about", "AH B AW T"},
    {"again", "AH G EH N"},
    {"all", "AO L"},
    {"am", "AE M"},
    {"and", "AH N D"},
    {"are", "AA R"},
    {"at", "AE T"},
    {"be", "B IY"},
    {"bye", "B AY"},
    {"can", "K AE N"},
    {"dance", "D AE N S"},
    {"day", "D EY"},
    {"do", "D UW"},
    {"doing", "D UW IH NG"},
    {"feel", "F IY L"},
    {"for", "F AO R"},
    {"friend", "F R EH N D"},
    {"fun", "F AH N"},
    {"game", "G EY M"},
    {"good", "G UH D"},
    {"goodbye", "G UH D B AY"},
    {"great", "G R EY T"},
    {"happy", "HH AE P IY"},
    {"have", "HH AE V"},
    {"hello", "HH EH L OW"},
    {"help", "HH EH L P"},
    {"here", "HH IY R"},
    {"hi", "HH AY"},
    {"how", "HH AW"},
    {"i", "AY"},
    {"i'm", "AY M"},
    {"is", "IH Z"},
    {"it", "IH T"},
    {"just", "JH AH S T"},
    {"let's", "L EH T S"},
    {"like", "L AY K"},
    {"look", "L UH K"},
    {"me", "M IY"},
    {"meet", "M IY T"},
    {"morning", "M AO R N IH NG"},
    {"my", "M AY"},
    {"name", "N EY M"},
    {"nice", "N AY S"},
    {"no", "N OW"},
    {"now", "N AW"},
    {"of", "AH V"},
    {"okay", "OW K EY"},
    {"over", "OW V ER"},
    {"play", "P L EY"},
    {"please", "P L IY Z"},
    {"robot", "R OW B AA T"},
    {"see", "S IY"},
    {"she", "SH IY"},
    {"so", "S OW"},
    {"sprite", "S P R AY T"},
    {"thank", "TH AE NG K"},
    {"thanks", "TH AE NG K S"},
    {"that", "DH AE T"},
    {"the", "DH AH"},
    {"there", "DH EH R"},
    {"this", "DH IH S"},
    {"time", "T AY M"},
    {"to", "T UW"},
    {"today", "T AH D EY"},
    {"together", "T AH G EH DH ER"},
    {"very", "V EH R IY"},
    {"we", "W IY"},
    {"welcome", "W EH L K AH M"},
    {"what", "W AH T"},
    {"with", "W IH DH"},
    {"world", "W ER L D"},
    {"wow", "W AW"},
    {"yes", "Y EH S"},
    {"you", "Y UW"},
    {"your", "Y AO R"},
    {"zoo", "Z UW"},
    {"measure", "M EH ZH ER"},
    {"church", "CH ER CH"},
    {"boy", "B OY"},
    {"thought", "TH AO T"},
    {"sing", "S IH NG"},
};

// Spelling fallback for unknown words.
const char* letter_phoneme(char c) {
  static const char* const letters[26] = {"AE", "B", "K",  "D", "EH", "F", "G", "HH", "IH", "JH", "K", "L", "M",
                                          "N",  "AA", "P", "K", "R",  "S", "T", "AH", "V",  "W",  "K", "Y", "Z"};
  if (c >= 'a' && c <= 'z') return letters[c - 'a'];
  if (c >= '0' && c <= '9') return "AH";
  return nullptr;
}

const std::map<std::string, std::vector<std::string>>& table() {
  static const auto t = [] {
    std::map<std::string, std::vector<std::string>> m;
    for (const auto& e : kEntries) {
      std::istringstream in(e[1]);
      std::vector<std::string> ph;
      for (std::string p; in >> p;) ph.push_back(p);
      m.emplace(e[0], std::move(ph));
    }
    return m;
  }();
  return t;
}

std::string lower(std::string_view w) {
  std::string s(w);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

const Lexicon& Lexicon::bundled() {
  static const Lexicon lex;
  return lex;
}

bool Lexicon::contains(std::string_view word) const { return table().count(lower(word)) > 0; }

std::size_t Lexicon::size() const { return table().size(); }

std::vector<std::string> Lexicon::pronounce(std::string_view word) const {
  const std::string w = lower(word);
  if (const auto it = table().find(w); it != table().end()) return it->second;
  std::vector<std::string> out;
  for (char c : w) {
    if (const char* p = letter_phoneme(c)) out.emplace_back(p);
  }
  return out;
}

std::vector<std::string> Lexicon::phoneme_inventory() const {
  std::set<std::string> all;
  for (const auto& [_, ph] : table()) all.insert(ph.begin(), ph.end());
  for (char c = 'a'; c <= 'z'; ++c) all.insert(letter_phoneme(c));
  all.insert(letter_phoneme('0'));
  return {all.begin(), all.end()};
}

}  // namespace sprite::dialogue
