#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "sprite/animation/clip.hpp"
#include "sprite/animation/library.hpp"
#include "sprite/common/face.hpp"
#include "sprite/dialogue/action.hpp"
#include "sprite/dialogue/expression.hpp"
#include "sprite/dialogue/timing.hpp"
#include "sprite/dialogue/tts.hpp"
#include "sprite/dialogue/viseme.hpp"
#include "sprite/kinematics/pose.hpp"

namespace sprite::dialogue {

class SpeechCache;

using Point3 = std::array<double, 3>;

struct BehaviorEvent {
  double t = 0.0;
  BehaviorKind kind = BehaviorKind::Animation;
  std::string name;
  // Animation length; zero for instantaneous behaviors.
  double duration = 0.0;

  std::shared_ptr<const animation::AnimationClip> clip;
  face::Expression expression;
  double intensity = 1.0;
  // Gaze "point" target; look reset otherwise.
  bool lookReset = false;
  Point3 point{};
};

struct Timeline {
  SpeechTiming speech;
  // Audio starts at t = 0.
  std::vector<VisemeEvent> visemes;
  std::vector<BehaviorEvent> behaviors;
  double totalDuration = 0.0;
};

struct ScheduleDeps {
  const animation::ClipLibrary* clips = nullptr;
  const ExpressionRegistry* expressions = nullptr;
  TtsClient* tts = nullptr;
  SpeechCache* cache = nullptr;
  std::string voice = "default";
};

// Checks every tag, then synthesizes. Throws DialogueError UnresolvedBehavior
// naming the first tag that does not resolve, or the synthesis errors.
Timeline schedule(const DialogueAction& action, const ScheduleDeps& deps);

// Word-anchored time of a tag: start of that word, or the audio end.
double anchor_time(const BehaviorTag& tag, const SpeechTiming& speech);

// What the executor hands to the sinks.
enum class DispatchKind { AudioStart, Viseme, Expression, Gaze, LookReset, AnimationStart, BodyPose, FaceUnits };

std::string_view to_string(DispatchKind k);

struct DispatchEvent {
  double t = 0.0;
  DispatchKind kind = DispatchKind::AudioStart;
  std::string label;
  face::Viseme viseme = face::Viseme::Sil;
  std::vector<face::ActionUnit> units;
  Point3 point{};
  kinematics::Pose6 pose;
  std::shared_ptr<const SpeechTiming> speech;

  std::string describe() const;
};

struct Plan {
  std::string label;
  std::vector<DispatchEvent> events;  // sorted by time, stable
  double duration = 0.0;
};

inline constexpr double kDefaultFrameRate = 50.0;

// Expands animations into frames at `frame_rate`. Clip face channels become
// FaceUnits when they change; gaze channels a Gaze at (gaze_x, gaze_y, 1 m);
// viseme channels a Viseme for the strongest one at or above 0.5.
Plan compile(const Timeline& timeline, double frame_rate = kDefaultFrameRate, std::string label = {});
Plan animation_plan(const animation::AnimationClip& clip, double frame_rate = kDefaultFrameRate);
Plan pose_plan(const kinematics::Pose6& pose);

}  // namespace sprite::dialogue
