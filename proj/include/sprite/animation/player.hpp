#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sprite/animation/clip.hpp"
#include "sprite/kinematics/pose.hpp"

namespace sprite::animation {

struct Frame {
  double t = 0.0;
  // One entry per track, in track order.
  std::vector<std::pair<std::string, double>> values;
};

// Fixed-rate frame source over a clip: frame k sits at k / rate, and the last
// of the floor(duration * rate) + 1 frames sits exactly at duration.
class ClipPlayer {
 public:
  // Throws std::invalid_argument unless rate > 0.
  ClipPlayer(const AnimationClip& clip, double rate);

  std::size_t frame_count() const { return count_; }
  double timestamp(std::size_t k) const;
  Frame frame(std::size_t k) const;

  // Sequential access.
  bool done() const { return next_ >= count_; }
  Frame next();

 private:
  const AnimationClip* clip_;
  double rate_;
  std::size_t count_;
  std::size_t next_ = 0;
};

std::vector<Frame> play(const AnimationClip& clip, double rate);

// Body channels of a frame as a pose (missing axes stay 0), or nullopt if the
// clip drives no body channel.
std::optional<kinematics::Pose6> body_pose(const Frame& frame);

}  // namespace sprite::animation
