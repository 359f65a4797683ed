#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <vector>

#include "json.hpp"
#include "sprite/kinematics/geometry.hpp"
#include "sprite/kinematics/kernels.hpp"
#include "sprite/kinematics/pose.hpp"

namespace sprite::kinematics {

struct WorkspaceResolution {
  double translation = 0.002;     // m
  double angle = deg2rad(1.0);    // rad
};

// Half-widths of the sampled grids around home.
struct WorkspaceBounds {
  double translation = 0.08;
  double angle = deg2rad(89.0);
};

// Reach along one axis from home, counting only grid samples contiguous with
// home (every sample between home and the extent is reachable).
struct AxisExtent {
  double negative = 0.0;  // magnitude
  double positive = 0.0;
  double symmetric() const { return negative < positive ? negative : positive; }
};

struct WorkspaceReport {
  std::string geometryName;
  WorkspaceResolution resolution;
  WorkspaceBounds bounds;

  std::array<AxisExtent, 3> translationExtent{};  // x, y, z at home orientation
  std::array<AxisExtent, 3> rotationExtent{};     // roll, pitch, yaw at home position
  // Per axis, the distance the platform can move in both directions.
  std::array<double, 3> maxTranslation{};
  // Largest tilt such that every sampled roll/pitch pair with no greater tilt
  // is reachable, i.e. the platform can lean that far in any direction.
  double maxTiltFromVertical = 0.0;
  // Largest tilt of any reachable roll/pitch sample.
  double peakTiltFromVertical = 0.0;

  std::size_t samplesTested = 0;
  // Reachable samples: the 3-D translation grid, then the roll/pitch grid,
  // then the yaw line.
  std::vector<Pose6> reachable;
};

// Samples a 3-D translation grid at home orientation, a roll/pitch grid and a
// yaw line at home position. Every pose in report.reachable passes
// validate_pose. Throws std::invalid_argument on non-positive resolution.
WorkspaceReport sample_workspace(const PlatformGeometry& geom, const WorkspaceResolution& resolution,
                                 const WorkspaceBounds& bounds = {}, Execution exec = Execution::Parallel);

// Summary only; the sample set goes to CSV.
nlohmann::json to_json(const WorkspaceReport& report);

// Header "x,y,z,roll,pitch,yaw,tilt" then one row per reachable sample
// (angles in degrees).
void write_csv(const WorkspaceReport& report, std::ostream& out);

}  // namespace sprite::kinematics
