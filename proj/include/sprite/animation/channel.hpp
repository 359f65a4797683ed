#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sprite/common/face.hpp"

namespace sprite::animation {

enum class ChannelKind { Body, ActionUnit, Viseme, Gaze };
enum class Unit { Meters, Radians, Intensity, Normalized };

std::string_view to_string(Unit u);

struct ChannelInfo {
  std::string name;
  ChannelKind kind = ChannelKind::Body;
  Unit unit = Unit::Meters;
  double min = 0.0;
  double max = 0.0;
  // Body: index into Pose6 order (x y z roll pitch yaw). Gaze: 0 = x, 1 = y.
  int axis = -1;
  // ActionUnit channels.
  int actionUnit = 0;
  face::Side side = face::Side::Both;
  // Viseme channels.
  face::Viseme viseme = face::Viseme::Sil;
};

// The one table of legal channels, their units and value ranges:
//   x y z                meters, [-0.1, 0.1]
//   roll pitch yaw       radians, [-pi/2, pi/2]
//   au<N> au<N>_left au<N>_right   intensity [0, 1], N a supported AU
//   viseme_<symbol>      intensity [0, 1], overrides the speech mouth
//   gaze_x gaze_y        normalized gaze offset [-1, 1]
class ChannelRegistry {
 public:
  static const ChannelRegistry& standard();

  const ChannelInfo* find(std::string_view name) const;
  std::span<const ChannelInfo> all() const { return channels_; }

 private:
  ChannelRegistry();
  std::vector<ChannelInfo> channels_;
};

}  // namespace sprite::animation
