#include "sprite/animation/player.hpp"

#include <cmath>
#include <stdexcept>

namespace sprite::animation {

ClipPlayer::ClipPlayer(const AnimationClip& clip, double rate) : clip_(&clip), rate_(rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw std::invalid_argument("frame rate must be positive");
  // Tolerates products like 0.7 * 10 = 7.000000000000001 and 6.9999999999.
  count_ = static_cast<std::size_t>(std::floor(clip.duration() * rate + 1e-9)) + 1;
}

double ClipPlayer::timestamp(std::size_t k) const {
  if (k + 1 == count_) return clip_->duration();
  return static_cast<double>(k) / rate_;
}

Frame ClipPlayer::frame(std::size_t k) const {
  Frame f;
  f.t = timestamp(k);
  const auto& tracks = clip_->tracks();
  f.values.reserve(tracks.size());
  for (std::size_t i = 0; i < tracks.size(); ++i) f.values.emplace_back(tracks[i].channel, clip_->sample_track(i, f.t));
  return f;
}

Frame ClipPlayer::next() { return frame(next_++); }

std::vector<Frame> play(const AnimationClip& clip, double rate) {
  ClipPlayer player(clip, rate);
  std::vector<Frame> frames;
  frames.reserve(player.frame_count());
  while (!player.done()) frames.push_back(player.next());
  return frames;
}

std::optional<kinematics::Pose6> body_pose(const Frame& frame) {
  std::array<double, 6> v{};
  bool any = false;
  for (const auto& [name, value] : frame.values) {
    const ChannelInfo* info = ChannelRegistry::standard().find(name);
    if (info != nullptr && info->kind == ChannelKind::Body) {
      v[static_cast<std::size_t>(info->axis)] = value;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  return kinematics::from_array(v);
}

}  // namespace sprite::animation
