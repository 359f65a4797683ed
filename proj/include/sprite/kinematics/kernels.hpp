#pragma once

#include <cstdint>
#include <span>

#include "sprite/kinematics/geometry.hpp"
#include "sprite/kinematics/inverse.hpp"
#include "sprite/kinematics/pose.hpp"

// Batch kernels over independent poses. The serial versions are the reference
// the OpenMP versions are tested against; both must produce identical output.
namespace sprite::kinematics {

enum class Execution { Serial, Parallel };

namespace serial {
void solve_ik_batch(std::span<const Pose6> poses, const PlatformGeometry& geom, std::span<IkSolution> out);
void reachability_mask(std::span<const Pose6> poses, const PlatformGeometry& geom, std::span<std::uint8_t> out);
}  // namespace serial

namespace parallel {
void solve_ik_batch(std::span<const Pose6> poses, const PlatformGeometry& geom, std::span<IkSolution> out);
void reachability_mask(std::span<const Pose6> poses, const PlatformGeometry& geom, std::span<std::uint8_t> out);
int max_threads();
}  // namespace parallel

void solve_ik_batch(std::span<const Pose6> poses, const PlatformGeometry& geom, std::span<IkSolution> out,
                    Execution exec);
void reachability_mask(std::span<const Pose6> poses, const PlatformGeometry& geom, std::span<std::uint8_t> out,
                       Execution exec);

}  // namespace sprite::kinematics
