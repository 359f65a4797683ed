#include "sprite/animation/channel.hpp"

#include "sprite/kinematics/pose.hpp"

namespace sprite::animation {

std::string_view to_string(Unit u) {
  switch (u) {
    case Unit::Meters: return "m";
    case Unit::Radians: return "rad";
    case Unit::Intensity: return "intensity";
    case Unit::Normalized: return "normalized";
  }
  return "?";
}

ChannelRegistry::ChannelRegistry() {
  constexpr double kTranslationLimit = 0.1;
  constexpr double kAngleLimit = kinematics::kPi / 2;
  for (int a = 0; a < 6; ++a) {
    ChannelInfo c;
    c.name = kinematics::kPoseAxisNames[static_cast<std::size_t>(a)];
    c.kind = ChannelKind::Body;
    c.unit = a < 3 ? Unit::Meters : Unit::Radians;
    c.min = a < 3 ? -kTranslationLimit : -kAngleLimit;
    c.max = -c.min;
    c.axis = a;
    channels_.push_back(c);
  }
  for (int id : face::kSupportedActionUnits) {
    for (face::Side side : {face::Side::Both, face::Side::Left, face::Side::Right}) {
      ChannelInfo c;
      c.name = "au" + std::to_string(id);
      if (side != face::Side::Both) c.name += "_" + std::string(face::to_string(side));
      c.kind = ChannelKind::ActionUnit;
      c.unit = Unit::Intensity;
      c.min = 0.0;
      c.max = 1.0;
      c.actionUnit = id;
      c.side = side;
      channels_.push_back(c);
    }
  }
  for (face::Viseme v : face::kAllVisemes) {
    if (v == face::Viseme::Sil) continue;
    ChannelInfo c;
    c.name = "viseme_" + std::string(face::to_string(v));
    c.kind = ChannelKind::Viseme;
    c.unit = Unit::Intensity;
    c.min = 0.0;
    c.max = 1.0;
    c.viseme = v;
    channels_.push_back(c);
  }
  for (int a = 0; a < 2; ++a) {
    ChannelInfo c;
    c.name = a == 0 ? "gaze_x" : "gaze_y";
    c.kind = ChannelKind::Gaze;
    c.unit = Unit::Normalized;
    c.min = -1.0;
    c.max = 1.0;
    c.axis = a;
    channels_.push_back(c);
  }
}

const ChannelRegistry& ChannelRegistry::standard() {
  static const ChannelRegistry registry;
  return registry;
}

const ChannelInfo* ChannelRegistry::find(std::string_view name) const {
  for (const auto& c : channels_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace sprite::animation
