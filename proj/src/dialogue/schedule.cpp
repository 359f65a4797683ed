#include "sprite/dialogue/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "sprite/animation/player.hpp"
#include "sprite/dialogue/cache.hpp"

namespace sprite::dialogue {

namespace {

[[noreturn]] void unresolved(const BehaviorTag& tag, const std::string& why) {
  const std::string name = std::string(to_string(tag.kind)) + ":" + tag.name;
  throw DialogueError(DialogueError::Kind::UnresolvedBehavior, name, "cannot resolve <" + name + ">: " + why);
}

std::optional<double> number(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

BehaviorEvent resolve_tag(const BehaviorTag& tag, const ScheduleDeps& deps) {
  BehaviorEvent ev;
  ev.kind = tag.kind;
  ev.name = tag.name;
  switch (tag.kind) {
    case BehaviorKind::Animation: {
      const animation::AnimationClip* clip = deps.clips ? deps.clips->find(tag.name) : nullptr;
      if (!clip) unresolved(tag, "no such animation");
      if (!tag.args.empty()) unresolved(tag, "animations take no arguments");
      ev.clip = std::make_shared<const animation::AnimationClip>(*clip);
      ev.duration = clip->duration();
      break;
    }
    case BehaviorKind::Expression: {
      const face::Expression* e = deps.expressions ? deps.expressions->find(tag.name) : nullptr;
      if (!e) unresolved(tag, "no such expression");
      if (tag.args.size() > 1) unresolved(tag, "expressions take at most an intensity");
      if (tag.args.size() == 1) {
        const auto k = number(tag.args[0]);
        if (!k || *k < 0.0 || *k > 1.0) unresolved(tag, "intensity must be a number in [0, 1]");
        ev.intensity = *k;
      }
      ev.expression = *e;
      for (auto& u : ev.expression.units) u.intensity *= ev.intensity;
      break;
    }
    case BehaviorKind::Gaze: {
      if (tag.name == "reset") {
        if (!tag.args.empty()) unresolved(tag, "reset takes no arguments");
        ev.lookReset = true;
      } else if (tag.name == "point") {
        if (tag.args.size() != 3) unresolved(tag, "point needs x, y, z in meters");
        for (int k = 0; k < 3; ++k) {
          const auto v = number(tag.args[k]);
          if (!v) unresolved(tag, "coordinate '" + tag.args[k] + "' is not a number");
          ev.point[k] = *v;
        }
      } else {
        unresolved(tag, "gaze tags are point(x, y, z) or reset");
      }
      break;
    }
  }
  return ev;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// Appends the events of one clip started at `t0`.
void expand_clip(const animation::AnimationClip& clip, double t0, double rate, std::vector<DispatchEvent>& out) {
  DispatchEvent start;
  start.t = t0;
  start.kind = DispatchKind::AnimationStart;
  start.label = clip.name();
  out.push_back(start);

  const auto& reg = animation::ChannelRegistry::standard();
  std::vector<face::ActionUnit> last_units;
  std::optional<Point3> last_gaze;
  std::optional<face::Viseme> last_mouth;
  for (const animation::Frame& f : animation::play(clip, rate)) {
    const double t = t0 + f.t;
    if (const auto pose = animation::body_pose(f)) {
      DispatchEvent e;
      e.t = t;
      e.kind = DispatchKind::BodyPose;
      e.label = clip.name();
      e.pose = *pose;
      out.push_back(e);
    }
    std::vector<face::ActionUnit> units;
    bool has_gaze = false;
    Point3 gaze{0.0, 0.0, 1.0};
    std::optional<face::Viseme> mouth;
    double mouth_level = 0.5;
    for (const auto& [name, raw] : f.values) {
      const animation::ChannelInfo* info = reg.find(name);
      if (!info) continue;
      // Curves may overshoot between keyframes. Face values are clamped to the
      // channel range; body values are left alone so validation still sees them.
      const double v = info->kind == animation::ChannelKind::Body ? raw : std::clamp(raw, info->min, info->max);
      switch (info->kind) {
        case animation::ChannelKind::ActionUnit: units.push_back({info->actionUnit, info->side, v}); break;
        case animation::ChannelKind::Gaze:
          has_gaze = true;
          gaze[info->axis] = v;
          break;
        case animation::ChannelKind::Viseme:
          if (v >= mouth_level) {
            mouth = info->viseme;
            mouth_level = v;
          }
          break;
        case animation::ChannelKind::Body: break;
      }
    }
    if (!units.empty() && units != last_units) {
      DispatchEvent e;
      e.t = t;
      e.kind = DispatchKind::FaceUnits;
      e.label = clip.name();
      e.units = units;
      out.push_back(e);
      last_units = units;
    }
    if (has_gaze && gaze != last_gaze) {
      DispatchEvent e;
      e.t = t;
      e.kind = DispatchKind::Gaze;
      e.label = clip.name();
      e.point = gaze;
      out.push_back(e);
      last_gaze = gaze;
    }
    if (mouth != last_mouth && (mouth || last_mouth)) {
      DispatchEvent e;
      e.t = t;
      e.kind = DispatchKind::Viseme;
      e.label = clip.name();
      e.viseme = mouth.value_or(face::Viseme::Sil);
      out.push_back(e);
      last_mouth = mouth;
    }
  }
}

void sort_events(std::vector<DispatchEvent>& events) {
  std::stable_sort(events.begin(), events.end(), [](const DispatchEvent& a, const DispatchEvent& b) { return a.t < b.t; });
}

}  // namespace

double anchor_time(const BehaviorTag& tag, const SpeechTiming& speech) {
  if (tag.anchorWord < speech.words.size()) return speech.words[tag.anchorWord].start;
  return speech.duration;
}

Timeline schedule(const DialogueAction& action, const ScheduleDeps& deps) {
  const std::vector<BehaviorTag> tags = action.tags();
  std::vector<BehaviorEvent> behaviors;
  for (const BehaviorTag& tag : tags) behaviors.push_back(resolve_tag(tag, deps));

  Timeline tl;
  tl.speech = synthesize(action, deps.tts, deps.cache, deps.voice);
  tl.visemes = phonemes_to_visemes(tl.speech);
  tl.totalDuration = tl.speech.duration;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    behaviors[i].t = anchor_time(tags[i], tl.speech);
    tl.totalDuration = std::max(tl.totalDuration, behaviors[i].t + behaviors[i].duration);
  }
  std::stable_sort(behaviors.begin(), behaviors.end(),
                   [](const BehaviorEvent& a, const BehaviorEvent& b) { return a.t < b.t; });
  tl.behaviors = std::move(behaviors);
  return tl;
}

std::string_view to_string(DispatchKind k) {
  switch (k) {
    case DispatchKind::AudioStart: return "audio_start";
    case DispatchKind::Viseme: return "viseme";
    case DispatchKind::Expression: return "expression";
    case DispatchKind::Gaze: return "gaze";
    case DispatchKind::LookReset: return "look_reset";
    case DispatchKind::AnimationStart: return "animation_start";
    case DispatchKind::BodyPose: return "body_pose";
    case DispatchKind::FaceUnits: return "face_units";
  }
  return "?";
}

std::string DispatchEvent::describe() const {
  std::string s(to_string(kind));
  switch (kind) {
    case DispatchKind::AudioStart:
      s += " duration=" + fmt(speech ? speech->duration : 0.0);
      break;
    case DispatchKind::Viseme: s += " " + std::string(face::to_string(viseme)); break;
    case DispatchKind::Expression:
    case DispatchKind::AnimationStart: s += " " + label; break;
    case DispatchKind::Gaze: s += " " + fmt(point[0]) + " " + fmt(point[1]) + " " + fmt(point[2]); break;
    case DispatchKind::LookReset: break;
    case DispatchKind::BodyPose:
      for (double v : kinematics::to_array(pose)) s += " " + fmt(v);
      break;
    case DispatchKind::FaceUnits:
      for (const auto& u : units) {
        s += " au" + std::to_string(u.id);
        if (u.side != face::Side::Both) s += "_" + std::string(face::to_string(u.side));
        s += "=" + fmt(u.intensity);
      }
      break;
  }
  return s;
}

Plan compile(const Timeline& tl, double frame_rate, std::string label) {
  Plan plan;
  plan.label = std::move(label);
  plan.duration = tl.totalDuration;

  DispatchEvent audio;
  audio.kind = DispatchKind::AudioStart;
  audio.speech = std::make_shared<const SpeechTiming>(tl.speech);
  plan.events.push_back(audio);

  for (const BehaviorEvent& b : tl.behaviors) {
    DispatchEvent e;
    e.t = b.t;
    e.label = b.name;
    switch (b.kind) {
      case BehaviorKind::Animation: expand_clip(*b.clip, b.t, frame_rate, plan.events); continue;
      case BehaviorKind::Expression:
        e.kind = DispatchKind::Expression;
        e.units = b.expression.units;
        break;
      case BehaviorKind::Gaze:
        e.kind = b.lookReset ? DispatchKind::LookReset : DispatchKind::Gaze;
        e.point = b.point;
        break;
    }
    plan.events.push_back(e);
  }
  for (const VisemeEvent& v : tl.visemes) {
    DispatchEvent e;
    e.t = v.t;
    e.kind = DispatchKind::Viseme;
    e.viseme = v.viseme;
    plan.events.push_back(e);
  }
  sort_events(plan.events);
  return plan;
}

Plan animation_plan(const animation::AnimationClip& clip, double frame_rate) {
  Plan plan;
  plan.label = "anim:" + clip.name();
  plan.duration = clip.duration();
  expand_clip(clip, 0.0, frame_rate, plan.events);
  sort_events(plan.events);
  return plan;
}

Plan pose_plan(const kinematics::Pose6& pose) {
  Plan plan;
  plan.label = "pose";
  DispatchEvent e;
  e.kind = DispatchKind::BodyPose;
  e.pose = pose;
  plan.events.push_back(e);
  return plan;
}

}  // namespace sprite::dialogue
