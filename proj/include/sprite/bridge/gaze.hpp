#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>

#include "sprite/bridge/face_command.hpp"

namespace sprite::bridge {

struct TargetSample {
  double t = 0.0;  // seconds, any origin, strictly increasing per track
  Point3 point{};
};

// At most one tracked target per robot; a new track replaces the old one and
// the old stream's further updates are dropped.
class GazeTracker {
 public:
  using Publish = std::function<void(const FaceCommand&)>;
  using Follow = std::function<void(const std::string& target, const Point3& point)>;

  GazeTracker(std::string robot, Publish publish) : robot_(std::move(robot)), publish_(std::move(publish)) {}

  // Returns the track handle.
  std::uint64_t begin(const std::string& target);
  // False, and nothing sent, for a stale handle, a non-increasing timestamp
  // or a non-finite point.
  bool update(std::uint64_t track, const TargetSample& s);
  // Sends LookReset if the track is still the active one.
  bool end(std::uint64_t track);

  struct Current {
    std::string target;
    Point3 point{};
    double t = 0.0;
  };
  std::optional<Current> current() const;

  // Extension point for body reorientation after the eyes; called after each
  // forwarded update. No policy is built in.
  void set_follow(Follow fn);

 private:
  std::string robot_;
  Publish publish_;
  Follow follow_;
  mutable std::mutex mu_;
  std::uint64_t active_ = 0;
  std::uint64_t next_ = 0;
  std::string target_;
  std::optional<TargetSample> last_;
};

}  // namespace sprite::bridge
