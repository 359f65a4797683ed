#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Face vocabulary shared by the animation, dialogue and bridge modules.
namespace sprite::face {

// Mouth shapes. Sil is the closed/neutral mouth.
enum class Viseme { Sil, PP, FF, TH, DD, kk, CH, SS, nn, RR, aa, E, ih, oh, ou };

inline constexpr std::array<Viseme, 15> kAllVisemes = {Viseme::Sil, Viseme::PP, Viseme::FF, Viseme::TH, Viseme::DD,
                                                       Viseme::kk,  Viseme::CH, Viseme::SS, Viseme::nn, Viseme::RR,
                                                       Viseme::aa,  Viseme::E,  Viseme::ih, Viseme::oh, Viseme::ou};

std::string_view to_string(Viseme v);
std::optional<Viseme> parse_viseme(std::string_view s);

// FACS-style action units the face implements: brows (1, 2, 4), lids (5, 7),
// cheeks (6), lip corners (12, 15) and jaw (26).
inline constexpr std::array<int, 9> kSupportedActionUnits = {1, 2, 4, 5, 6, 7, 12, 15, 26};

bool is_supported_action_unit(int id);

enum class Side { Left, Right, Both };

std::string_view to_string(Side s);
std::optional<Side> parse_side(std::string_view s);

struct ActionUnit {
  int id = 0;
  Side side = Side::Both;
  double intensity = 0.0;  // [0, 1]

  bool operator==(const ActionUnit&) const = default;
};

// Named set of action units, e.g. "happy".
struct Expression {
  std::string name;
  std::vector<ActionUnit> units;
};

}  // namespace sprite::face
