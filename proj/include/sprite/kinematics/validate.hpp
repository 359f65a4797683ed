#pragma once

#include <array>
#include <string>

#include "sprite/kinematics/geometry.hpp"
#include "sprite/kinematics/inverse.hpp"
#include "sprite/kinematics/pose.hpp"

namespace sprite::kinematics {

// Kinematic-level software limit: a pose is sendable only when every leg has
// a real solution inside [servoMin, servoMax].
struct ValidationResult {
  bool valid = false;
  // Dominant failure when invalid: NonFinite, then Unreachable, then OutOfRange.
  LegFailure reason = LegFailure::None;
  std::array<LegFailure, kLegs> legs{};
  ServoAngles angles;

  explicit operator bool() const { return valid; }
  std::string describe() const;
};

ValidationResult validate_pose(const Pose6& pose, const PlatformGeometry& geom);

}  // namespace sprite::kinematics
