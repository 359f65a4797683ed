#include "sprite/common/face.hpp"

#include <algorithm>

namespace sprite::face {

std::string_view to_string(Viseme v) {
  switch (v) {
    case Viseme::Sil: return "sil";
    case Viseme::PP: return "PP";
    case Viseme::FF: return "FF";
    case Viseme::TH: return "TH";
    case Viseme::DD: return "DD";
    case Viseme::kk: return "kk";
    case Viseme::CH: return "CH";
    case Viseme::SS: return "SS";
    case Viseme::nn: return "nn";
    case Viseme::RR: return "RR";
    case Viseme::aa: return "aa";
    case Viseme::E: return "E";
    case Viseme::ih: return "ih";
    case Viseme::oh: return "oh";
    case Viseme::ou: return "ou";
  }
  return "sil";
}

std::optional<Viseme> parse_viseme(std::string_view s) {
  for (Viseme v : kAllVisemes) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

bool is_supported_action_unit(int id) {
  return std::find(kSupportedActionUnits.begin(), kSupportedActionUnits.end(), id) != kSupportedActionUnits.end();
}

std::string_view to_string(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Both: return "both";
  }
  return "both";
}

std::optional<Side> parse_side(std::string_view s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  if (s == "both") return Side::Both;
  return std::nullopt;
}

}  // namespace sprite::face
