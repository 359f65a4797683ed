#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "sprite/kinematics/forward.hpp"
#include "sprite/kinematics/inverse.hpp"
#include "sprite/kinematics/validate.hpp"

using namespace sprite::kinematics;
using sprite::testing::bisect_leg_angle;
using sprite::testing::random_poses;

namespace {

const PlatformGeometry& geom() {
  static const PlatformGeometry g = sprite_default_geometry();
  return g;
}

std::vector<Pose6> reachable_poses(std::size_t n, std::uint32_t seed) {
  std::vector<Pose6> out;
  for (const Pose6& p : random_poses(20 * n, seed)) {
    if (validate_pose(p, geom()).valid) out.push_back(p);
    if (out.size() == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("IK of the zero-angle pose is all zeros") {
  const Pose6 home = forward_kinematics(ServoAngles{}, geom());
  const ServoAngles a = inverse_kinematics(home, geom());
  for (double v : a.alpha) CHECK(std::abs(v) < 1e-9);
}

TEST_CASE("pure z translation gives equal magnitudes on every leg") {
  for (double z : {-0.03, -0.01, 0.015, 0.035}) {
    const ServoAngles a = inverse_kinematics({0, 0, z, 0, 0, 0}, geom());
    for (double v : a.alpha) CHECK(std::abs(std::abs(v) - std::abs(a.alpha[0])) < 1e-9);
    // Mirrored pairs turn in opposite shaft directions.
    CHECK(a.alpha[0] * a.alpha[1] < 0.0);
  }
}

TEST_CASE("figure poses are solvable on the default geometry") {
  const double t30 = deg2rad(30.0);
  for (const Pose6& p : {Pose6{0, 0, 0.04, 0, 0, 0}, Pose6{0, 0, -0.04, 0, 0, 0}, Pose6{0, 0, 0, 0, t30, 0},
                         Pose6{0, 0, 0, 0, -t30, 0}, Pose6{0, 0, 0, t30, 0, 0}, Pose6{0, 0, 0, -t30, 0, 0}}) {
    CHECK_NOTHROW(inverse_kinematics(p, geom()));
  }
}

TEST_CASE("poses beyond horn plus rod reach are unreachable") {
  try {
    inverse_kinematics({0, 0, 0.30, 0, 0, 0}, geom());
    FAIL("expected IkError");
  } catch (const IkError& e) {
    CHECK(e.kind() == LegFailure::Unreachable);
    CHECK(e.leg() == 0);
  }
}

TEST_CASE("angles outside the servo range are OutOfRange") {
  PlatformGeometry narrow = geom();
  narrow.servoMin = deg2rad(-5.0);
  narrow.servoMax = deg2rad(5.0);
  const IkSolution s = solve_ik({0, 0, 0.03, 0, 0, 0}, narrow);
  CHECK_FALSE(s.ok());
  for (LegFailure f : s.legs) CHECK(f == LegFailure::OutOfRange);
  CHECK_THROWS_AS(inverse_kinematics({0, 0, 0.03, 0, 0, 0}, narrow), IkError);
}

TEST_CASE("non-finite poses are rejected without throwing from solve_ik") {
  const IkSolution s = solve_ik({0, std::nan(""), 0, 0, 0, 0}, geom());
  CHECK(s.legs[0] == LegFailure::NonFinite);
  CHECK(validate_pose({0, 0, 0, INFINITY, 0, 0}, geom()).reason == LegFailure::NonFinite);
}

TEST_CASE("closed form matches the bisection oracle leg by leg") {
  const auto poses = reachable_poses(1000, 7);
  REQUIRE(poses.size() == 1000);
  double worst = 0.0;
  for (const Pose6& p : poses) {
    const ServoAngles a = inverse_kinematics(p, geom());
    for (std::size_t i = 0; i < kLegs; ++i) {
      const auto ref = bisect_leg_angle(geom(), i, p);
      REQUIRE(ref.has_value());
      worst = std::max(worst, std::abs(a.alpha[i] - *ref));
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("mirror symmetry about the xz plane") {
  // Reflection y -> -y swaps legs 0<->1, 2<->5, 3<->4 and flips shaft signs.
  constexpr std::array<std::size_t, kLegs> perm = {1, 0, 5, 4, 3, 2};
  for (double roll : {0.1, 0.3, deg2rad(30.0)}) {
    const ServoAngles plus = inverse_kinematics({0, 0, 0, roll, 0, 0}, geom());
    const ServoAngles minus = inverse_kinematics({0, 0, 0, -roll, 0, 0}, geom());
    for (std::size_t i = 0; i < kLegs; ++i) CHECK(plus.alpha[perm[i]] == doctest::Approx(-minus.alpha[i]).epsilon(1e-12));
  }
  for (const Pose6& p : reachable_poses(50, 11)) {
    const Pose6 mirrored{p.x, -p.y, p.z, -p.roll, p.pitch, -p.yaw};
    const IkSolution m = solve_ik(mirrored, geom());
    REQUIRE(m.ok());
    const ServoAngles a = inverse_kinematics(p, geom());
    for (std::size_t i = 0; i < kLegs; ++i) CHECK(std::abs(a.alpha[perm[i]] + m.angles.alpha[i]) < 1e-9);
  }
}

TEST_CASE("IK is continuous inside the validated workspace") {
  // Angle changes must shrink with the perturbation, even where asin is steep.
  auto nudged = [](const Pose6& p, double d) {
    auto v = to_array(p);
    for (double& c : v) c += d;
    return solve_ik(from_array(v), geom());
  };
  for (const Pose6& p : reachable_poses(200, 5)) {
    const IkSolution big = nudged(p, 1e-7), small = nudged(p, 1e-9);
    if (!big.ok() || !small.ok()) continue;  // on the boundary
    const ServoAngles a = inverse_kinematics(p, geom());
    for (std::size_t i = 0; i < kLegs; ++i) {
      const double db = std::abs(a.alpha[i] - big.angles.alpha[i]);
      const double ds = std::abs(a.alpha[i] - small.angles.alpha[i]);
      CHECK(db < 1e-3);
      CHECK(ds <= 0.2 * db + 1e-12);
    }
  }
}

TEST_CASE("validate_pose agrees with inverse_kinematics") {
  for (const Pose6& p : random_poses(2000, 3, 0.08, deg2rad(60.0))) {
    const ValidationResult v = validate_pose(p, geom());
    bool ik_ok = true;
    try {
      const ServoAngles a = inverse_kinematics(p, geom());
      CHECK(a == v.angles);
    } catch (const IkError&) {
      ik_ok = false;
    }
    CHECK(v.valid == ik_ok);
  }
  CHECK(validate_pose({}, geom()).valid);
  CHECK(validate_pose({0, 0, deg2rad(0), 0, deg2rad(30), 0}, geom()).valid);
  const ValidationResult far = validate_pose({0, 0, 0.30, 0, 0, 0}, geom());
  CHECK_FALSE(far.valid);
  CHECK(far.reason == LegFailure::Unreachable);
  CHECK(far.describe().find("unreachable") != std::string::npos);
}
