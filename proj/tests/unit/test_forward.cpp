#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "sprite/kinematics/forward.hpp"
#include "sprite/kinematics/validate.hpp"

using namespace sprite::kinematics;

namespace {
const PlatformGeometry& geom() {
  static const PlatformGeometry g = sprite_default_geometry();
  return g;
}
}  // namespace

TEST_CASE("FK of zero angles is the level home pose") {
  const FkResult r = solve_fk(ServoAngles{}, geom(), Pose6{0.01, -0.01, 0.01, 0.1, 0.1, -0.1});
  CHECK(std::abs(r.pose.x) < 1e-9);
  CHECK(std::abs(r.pose.y) < 1e-9);
  CHECK(std::abs(r.pose.z) < 1e-9);
  CHECK(std::abs(r.pose.roll) < 1e-9);
  CHECK(std::abs(r.pose.pitch) < 1e-9);
  CHECK(std::abs(r.pose.yaw) < 1e-9);
  // Absolute home height sits between the rod length and rod plus horn.
  CHECK(geom().homePosition.z() > 0.09);
  CHECK(geom().homePosition.z() < geom().rodLength + geom().hornLength);
  CHECK(geom().homePosition.head<2>().norm() < 1e-12);
}

TEST_CASE("FK residuals at the solution are below tolerance") {
  const ServoAngles a{{0.2, -0.1, 0.3, -0.25, 0.05, 0.0}};
  const FkResult r = solve_fk(a, geom());
  CHECK(r.residualNorm <= 1e-10);
  for (std::size_t i = 0; i < kLegs; ++i) {
    const double dist = (platform_point(geom(), i, r.pose) - horn_tip(geom(), i, a.alpha[i])).norm();
    CHECK(std::abs(dist - geom().rodLength) < 1e-9);
  }
}

TEST_CASE("FK inverts IK over random reachable poses") {
  int checked = 0;
  int worst_iterations = 0;
  for (const Pose6& p : sprite::testing::random_poses(4000, 99, sprite::testing::kRoundTripTranslation,
                                                      sprite::testing::kRoundTripAngle)) {
    const ValidationResult v = validate_pose(p, geom());
    if (!v.valid) continue;
    const FkResult r = solve_fk(v.angles, geom());
    worst_iterations = std::max(worst_iterations, r.iterations);
    const auto got = to_array(r.pose), want = to_array(normalized(p));
    for (int k = 0; k < 6; ++k) CHECK(std::abs(got[k] - want[k]) < 1e-6);
    if (++checked == 1000) break;
  }
  CHECK(checked == 1000);
  CHECK(worst_iterations <= 20);
}

TEST_CASE("FK reports NoConvergence for impossible angle sets") {
  PlatformGeometry g = geom();
  // Horns straight down on one side, up on the other: rods cannot close.
  const ServoAngles a{{1.5, 1.5, -1.5, -1.5, 1.5, 1.5}};
  FkOptions opt;
  opt.maxIterations = 30;
  CHECK_THROWS_AS(solve_fk(a, g, {}, opt), NoConvergence);
}
