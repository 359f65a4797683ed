#include <cassert>

#include "sprite/kinematics/kernels.hpp"

namespace sprite::kinematics {

namespace serial {

void solve_ik_batch(std::span<const Pose6> poses, const PlatformGeometry& geom, std::span<IkSolution> out) {
  assert(out.size() == poses.size());
  for (std::size_t i = 0; i < poses.size(); ++i) out[i] = solve_ik(poses[i], geom);
}

void reachability_mask(std::span<const Pose6> poses, const PlatformGeometry& geom, std::span<std::uint8_t> out) {
  assert(out.size() == poses.size());
  for (std::size_t i = 0; i < poses.size(); ++i) out[i] = solve_ik(poses[i], geom).ok() ? 1 : 0;
}

}  // namespace serial

void solve_ik_batch(std::span<const Pose6> poses, const PlatformGeometry& geom, std::span<IkSolution> out,
                    Execution exec) {
  if (exec == Execution::Parallel) {
    parallel::solve_ik_batch(poses, geom, out);
  } else {
    serial::solve_ik_batch(poses, geom, out);
  }
}

void reachability_mask(std::span<const Pose6> poses, const PlatformGeometry& geom, std::span<std::uint8_t> out,
                       Execution exec) {
  if (exec == Execution::Parallel) {
    parallel::reachability_mask(poses, geom, out);
  } else {
    serial::reachability_mask(poses, geom, out);
  }
}

}  // namespace sprite::kinematics
