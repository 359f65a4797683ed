#include "sprite/bridge/gaze.hpp"

#include <cmath>

namespace sprite::bridge {

std::uint64_t GazeTracker::begin(const std::string& target) {
  std::lock_guard lock(mu_);
  active_ = ++next_;
  target_ = target;
  last_.reset();
  return active_;
}

bool GazeTracker::update(std::uint64_t track, const TargetSample& s) {
  Follow follow;
  std::string target;
  {
    std::lock_guard lock(mu_);
    if (track != active_ || active_ == 0) return false;
    if (!std::isfinite(s.t) || !std::isfinite(s.point[0]) || !std::isfinite(s.point[1]) ||
        !std::isfinite(s.point[2])) {
      return false;
    }
    if (last_ && s.t <= last_->t) return false;
    last_ = s;
    // Published under the lock so a replacing track cannot interleave.
    publish_({robot_, GazeMsg{s.point, target_, s.t}});
    follow = follow_;
    target = target_;
  }
  if (follow) follow(target, s.point);
  return true;
}

bool GazeTracker::end(std::uint64_t track) {
  std::lock_guard lock(mu_);
  if (track != active_ || active_ == 0) return false;
  active_ = 0;
  last_.reset();
  publish_({robot_, LookResetMsg{}});
  return true;
}

std::optional<GazeTracker::Current> GazeTracker::current() const {
  std::lock_guard lock(mu_);
  if (active_ == 0 || !last_) return std::nullopt;
  return Current{target_, last_->point, last_->t};
}

void GazeTracker::set_follow(Follow fn) {
  std::lock_guard lock(mu_);
  follow_ = std::move(fn);
}

}  // namespace sprite::bridge
