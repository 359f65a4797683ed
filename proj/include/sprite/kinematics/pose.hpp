#pragma once

#include <array>
#include <numbers>

#include <Eigen/Core>

namespace sprite::kinematics {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = std::numbers::pi;

constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Platform pose as an offset from the home pose (the pose reached with all
// servo angles at zero). Translations in meters, expressed in the base frame
// (z up). Angles in radians, applied intrinsically: roll about x, then pitch
// about the new y, then yaw about the new z, so R = Rx(roll) Ry(pitch) Rz(yaw).
// Every module shares this convention.
struct Pose6 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double roll = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;

  bool operator==(const Pose6&) const = default;
};

inline constexpr std::array<const char*, 6> kPoseAxisNames = {"x", "y", "z", "roll", "pitch", "yaw"};

std::array<double, 6> to_array(const Pose6& pose);
Pose6 from_array(const std::array<double, 6>& values);

bool is_finite(const Pose6& pose);

// Maps into (-pi, pi].
double normalize_angle(double angle);
Pose6 normalized(Pose6 pose);

Mat3 rotation(double roll, double pitch, double yaw);
Mat3 rotation(const Pose6& pose);

// Partial derivatives of rotation() with respect to roll, pitch and yaw.
std::array<Mat3, 3> rotation_derivatives(const Pose6& pose);

inline Vec3 translation(const Pose6& pose) { return {pose.x, pose.y, pose.z}; }

// Angle between the platform normal and the base z axis.
double tilt_from_vertical(const Pose6& pose);

}  // namespace sprite::kinematics
