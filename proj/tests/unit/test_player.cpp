#include <cmath>

#include "doctest.h"
#include "sprite/animation/library.hpp"
#include "sprite/animation/player.hpp"
#include "sprite/kinematics/validate.hpp"

using namespace sprite::animation;

TEST_CASE("one second at 50 fps gives 51 frames ending at the duration") {
  const AnimationClip c("s", {{"z", {{0.0, 0.0}, {1.0, 0.02}}}});
  const auto frames = play(c, 50.0);
  REQUIRE(frames.size() == 51);
  for (std::size_t k = 0; k < frames.size(); ++k) CHECK(frames[k].t == doctest::Approx(k * 0.02).epsilon(1e-12));
  CHECK(frames.front().t == 0.0);
  CHECK(frames.back().t == 1.0);
  CHECK(frames.back().values.at(0).second == 0.02);
}

TEST_CASE("frame count is floor(duration * rate) + 1") {
  const AnimationClip c("s", {{"z", {{0.0, 0.0}, {1.03, 0.02}}}});
  for (double rate : {1.0, 7.0, 30.0, 50.0, 60.0, 100.0}) {
    const auto frames = play(c, rate);
    CHECK(frames.size() == static_cast<std::size_t>(std::floor(1.03 * rate)) + 1);
    CHECK(frames.back().t == 1.03);
  }
}

TEST_CASE("an empty clip gives a single empty frame") {
  const AnimationClip c("empty", {});
  const auto frames = play(c, 50.0);
  REQUIRE(frames.size() == 1);
  CHECK(frames[0].t == 0.0);
  CHECK(frames[0].values.empty());
  CHECK_FALSE(body_pose(frames[0]).has_value());
}

TEST_CASE("player rejects non-positive rates") {
  const AnimationClip c("s", {});
  CHECK_THROWS_AS(ClipPlayer(c, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ClipPlayer(c, -5.0), std::invalid_argument);
}

TEST_CASE("sequential playback matches random access") {
  const AnimationClip c("s", {{"roll", {{0.0, 0.0}, {0.5, 0.2}, {0.9, -0.1}}}, {"au12", {{0.2, 1.0}}}});
  ClipPlayer p(c, 30.0);
  std::size_t k = 0;
  while (!p.done()) {
    const Frame f = p.next();
    const Frame g = p.frame(k++);
    CHECK(f.t == g.t);
    CHECK(f.values == g.values);
    CHECK(f.values.size() == 2);
  }
  CHECK(k == p.frame_count());
}

TEST_CASE("body channels assemble into a pose") {
  Frame f{0.1, {{"z", 0.01}, {"au12", 0.5}, {"yaw", 0.2}}};
  const auto pose = body_pose(f);
  REQUIRE(pose.has_value());
  CHECK(pose->z == 0.01);
  CHECK(pose->yaw == 0.2);
  CHECK(pose->x == 0.0);
}

TEST_CASE("every golden clip frame is a valid pose") {
  const auto geom = sprite::kinematics::sprite_default_geometry();
  const ClipLibrary lib = ClipLibrary::load_directory(std::string(SPRITE_SOURCE_DIR) + "/clips");
  for (const std::string& name : lib.names()) {
    const LintReport r = lint_clip(*lib.find(name), geom, 50.0);
    CAPTURE(name);
    CHECK(r.ok());
    CHECK(r.framesChecked > 0);
  }
}

TEST_CASE("lint flags frames outside the workspace") {
  const auto geom = sprite::kinematics::sprite_default_geometry();
  const AnimationClip c("bad", {{"z", {{0.0, 0.0}, {1.0, 0.09}}}});
  const LintReport r = lint_clip(c, geom, 10.0);
  CHECK_FALSE(r.ok());
  CHECK(r.issues.front().t > 0.0);
}
