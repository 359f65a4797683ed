#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "sprite/kinematics/pose.hpp"

namespace sprite::kinematics {

inline constexpr std::size_t kLegs = 6;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything the inverse kinematics needs. Base anchors are servo shaft
// centers in the base frame; platform anchors are rod ball joints in the
// platform frame (origin at platform center). At servo angle zero each horn
// lies horizontal, pointing along its servoAxisAngles heading.
struct PlatformGeometry {
  std::string name;
  std::array<Vec3, kLegs> baseAnchors{};
  std::array<Vec3, kLegs> platformAnchors{};
  double hornLength = 0.0;
  double rodLength = 0.0;
  std::array<double, kLegs> servoAxisAngles{};
  // +1 or -1. A mirrored servo turns its horn down for a positive shaft angle.
  std::array<int, kLegs> hornDirection{};
  double servoMin = -kPi / 2;
  double servoMax = kPi / 2;
  // Platform center at all-zero servo angles, in the base frame. Filled by
  // finalize_geometry(); Pose6 offsets are relative to this point.
  Vec3 homePosition = Vec3::Zero();
};

// Parameters of a 3-fold symmetric rotary layout: servo pairs centered on
// headings 0, 120 and 240 degrees, each pair mirrored about its center line.
struct SymmetricLayout {
  std::string name = "symmetric";
  double baseRadius = 0.09;
  double platformRadius = 0.05;
  double baseHalfAngle = deg2rad(20.0);
  double platformHalfAngle = deg2rad(50.0);
  double hornLength = 0.045;
  double rodLength = 0.12;
  double servoMin = -kPi / 2;
  double servoMax = kPi / 2;
};

// Throws GeometryError when an invariant is broken.
void check_geometry(const PlatformGeometry& geom);

// Validates and computes homePosition from the zero-angle configuration.
// Throws GeometryError if the zero-angle pose is not a level platform.
PlatformGeometry finalize_geometry(PlatformGeometry geom);

PlatformGeometry symmetric_geometry(const SymmetricLayout& layout);

// Layout frozen in config/sprite-default.geometry.json (version 1).
SymmetricLayout sprite_default_layout();
PlatformGeometry sprite_default_geometry();

inline constexpr int kGeometryFormatVersion = 1;

PlatformGeometry geometry_from_json(const nlohmann::json& doc);
nlohmann::json geometry_to_json(const PlatformGeometry& geom);
PlatformGeometry load_geometry(const std::filesystem::path& path);

// Horn tip of one leg at shaft angle alpha, base frame.
Vec3 horn_tip(const PlatformGeometry& geom, std::size_t leg, double alpha);

// Platform anchor of one leg at the given pose, base frame.
Vec3 platform_point(const PlatformGeometry& geom, std::size_t leg, const Pose6& pose);
Vec3 platform_point(const PlatformGeometry& geom, std::size_t leg, const Pose6& pose, const Mat3& rot);

}  // namespace sprite::kinematics
