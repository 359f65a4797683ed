#include <omp.h>

#include <cassert>
#include <cstdint>

#include "sprite/kinematics/kernels.hpp"

namespace sprite::kinematics::parallel {

void solve_ik_batch(std::span<const Pose6> poses, const PlatformGeometry& geom, std::span<IkSolution> out) {
  assert(out.size() == poses.size());
  const auto n = static_cast<std::int64_t>(poses.size());
  const Pose6* in = poses.data();
  IkSolution* dst = out.data();

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    dst[i] = solve_ik(in[i], geom);
  }
}

void reachability_mask(std::span<const Pose6> poses, const PlatformGeometry& geom, std::span<std::uint8_t> out) {
  assert(out.size() == poses.size());
  const auto n = static_cast<std::int64_t>(poses.size());
  const Pose6* in = poses.data();
  std::uint8_t* dst = out.data();

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    dst[i] = solve_ik(in[i], geom).ok() ? 1 : 0;
  }
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace sprite::kinematics::parallel
