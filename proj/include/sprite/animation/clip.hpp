#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sprite/animation/bezier.hpp"
#include "sprite/animation/channel.hpp"

namespace sprite::animation {

// Control offset relative to its keyframe: seconds and channel units.
struct Handle {
  double dt = 0.0;
  double dv = 0.0;

  bool operator==(const Handle&) const = default;
};

struct Keyframe {
  double t = 0.0;
  double v = 0.0;
  std::optional<Handle> out;  // shapes the segment leaving this key
  std::optional<Handle> in;   // shapes the segment arriving at this key

  bool operator==(const Keyframe&) const = default;
};

struct AnimationTrack {
  std::string channel;
  std::vector<Keyframe> keyframes;

  bool operator==(const AnimationTrack&) const = default;
};

class ClipError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Schema, DuplicateChannel, UnknownChannel };

  ClipError(Kind kind, std::string path, const std::string& message);

  Kind kind() const { return kind_; }
  // JSON pointer for schema errors, "byte N" for syntax errors.
  const std::string& path() const { return path_; }
  // The message without the path prefix.
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  std::string path_;
  std::string detail_;
};

// A validated clip. Tracks keep the keyframes as authored; omitted handles are
// resolved once at construction (one third of the segment span, Catmull-Rom
// slope) into per-segment cubic control points.
class AnimationClip {
 public:
  AnimationClip() = default;
  // Validates; throws ClipError(Schema/DuplicateChannel/UnknownChannel).
  AnimationClip(std::string name, std::vector<AnimationTrack> tracks);

  const std::string& name() const { return name_; }
  const std::vector<AnimationTrack>& tracks() const { return tracks_; }
  double duration() const { return duration_; }
  bool has_channel(std::string_view channel) const;

  // Throws ClipError(UnknownChannel).
  double sample(std::string_view channel, double t) const;
  double sample_track(std::size_t track, double t) const;

  // Resolved segments of one track (empty for a single-key track).
  const std::vector<CubicSegment>& segments(std::size_t track) const { return segments_[track]; }

  bool operator==(const AnimationClip& other) const { return name_ == other.name_ && tracks_ == other.tracks_; }

 private:
  std::string name_;
  std::vector<AnimationTrack> tracks_;
  std::vector<std::vector<CubicSegment>> segments_;
  double duration_ = 0.0;
};

// Strict parse of the clip JSON schema:
//   { "name": str, "tracks": [ { "channel": str,
//       "keyframes": [ { "t": num, "v": num, "out"?: [dt, dv], "in"?: [dt, dv] } ] } ] }
// Unknown keys, unknown channels, unsorted times and out-of-range values are
// errors.
AnimationClip parse_clip(std::string_view text);
std::string serialize_clip(const AnimationClip& clip);

}  // namespace sprite::animation
