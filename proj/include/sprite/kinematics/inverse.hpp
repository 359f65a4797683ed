#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string_view>

#include "sprite/kinematics/geometry.hpp"
#include "sprite/kinematics/pose.hpp"

namespace sprite::kinematics {

struct ServoAngles {
  std::array<double, kLegs> alpha{};

  bool operator==(const ServoAngles&) const = default;
};

enum class LegFailure { None, NonFinite, Unreachable, OutOfRange };

std::string_view to_string(LegFailure failure);

struct IkSolution {
  ServoAngles angles;
  std::array<LegFailure, kLegs> legs{};

  bool ok() const;
  // First failing leg, or kLegs when ok().
  std::size_t first_failure() const;
};

class IkError : public std::runtime_error {
 public:
  IkError(LegFailure kind, std::size_t leg);

  LegFailure kind() const { return kind_; }
  std::size_t leg() const { return leg_; }

 private:
  LegFailure kind_;
  std::size_t leg_;
};

// Closed-form shaft angle of one leg for a platform anchor already placed in
// the base frame. The horn tip circle meets the rod sphere where
//   M sin(e) + N cos(e) = L,
// with e the horn elevation; the arcsin branch is the one continuous with the
// horizontal-horn home solution. Never throws.
LegFailure solve_leg(const PlatformGeometry& geom, std::size_t leg, const Vec3& anchor, double& alpha);

// Non-throwing form; failing legs keep alpha = 0.
IkSolution solve_ik(const Pose6& pose, const PlatformGeometry& geom);

// Throws IkError for the first failing leg.
ServoAngles inverse_kinematics(const Pose6& pose, const PlatformGeometry& geom);

}  // namespace sprite::kinematics
