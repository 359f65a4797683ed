#include "sprite/animation/clip.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "json.hpp"

namespace sprite::animation {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw ClipError(ClipError::Kind::Schema, path, message);
}

std::string key_path(std::size_t track, std::size_t key) {
  return "/tracks/" + std::to_string(track) + "/keyframes/" + std::to_string(key);
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

void validate(const std::string& name, const std::vector<AnimationTrack>& tracks) {
  if (!valid_identifier(name)) schema_error("/name", "clip name must be a non-empty identifier");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    const AnimationTrack& tr = tracks[i];
    const std::string tpath = "/tracks/" + std::to_string(i);
    const ChannelInfo* info = ChannelRegistry::standard().find(tr.channel);
    if (info == nullptr) throw ClipError(ClipError::Kind::UnknownChannel, tpath + "/channel", "unknown channel '" + tr.channel + "'");
    if (!seen.insert(tr.channel).second) {
      throw ClipError(ClipError::Kind::DuplicateChannel, tpath + "/channel", "duplicate channel '" + tr.channel + "'");
    }
    if (tr.keyframes.empty()) schema_error(tpath + "/keyframes", "track needs at least one keyframe");
    const auto& keys = tr.keyframes;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      const Keyframe& kf = keys[k];
      const std::string kpath = key_path(i, k);
      if (!std::isfinite(kf.t) || kf.t < 0.0) schema_error(kpath + "/t", "time must be finite and non-negative");
      if (k > 0 && !(kf.t > keys[k - 1].t)) schema_error(kpath + "/t", "keyframe times must be strictly increasing");
      if (!std::isfinite(kf.v)) schema_error(kpath + "/v", "value must be finite");
      if (kf.v < info->min || kf.v > info->max) {
        schema_error(kpath + "/v", "value outside [" + json(info->min).dump() + ", " + json(info->max).dump() +
                                       "] " + std::string(to_string(info->unit)) + " for channel " + tr.channel);
      }
      if (kf.out) {
        if (k + 1 == keys.size()) schema_error(kpath + "/out", "last keyframe has no outgoing segment");
        const double span = keys[k + 1].t - kf.t;
        if (!std::isfinite(kf.out->dt) || !std::isfinite(kf.out->dv) || kf.out->dt < 0.0 || kf.out->dt > span) {
          schema_error(kpath + "/out", "outgoing handle time must lie in [0, segment span]");
        }
      }
      if (kf.in) {
        if (k == 0) schema_error(kpath + "/in", "first keyframe has no incoming segment");
        const double span = kf.t - keys[k - 1].t;
        if (!std::isfinite(kf.in->dt) || !std::isfinite(kf.in->dv) || kf.in->dt > 0.0 || kf.in->dt < -span) {
          schema_error(kpath + "/in", "incoming handle time must lie in [-segment span, 0]");
        }
      }
    }
  }
}

// Catmull-Rom style slope at key k; one-sided at the ends.
double slope(const std::vector<Keyframe>& keys, std::size_t k) {
  const std::size_t lo = k == 0 ? 0 : k - 1;
  const std::size_t hi = k + 1 == keys.size() ? k : k + 1;
  return (keys[hi].v - keys[lo].v) / (keys[hi].t - keys[lo].t);
}

std::vector<CubicSegment> resolve(const std::vector<Keyframe>& keys) {
  std::vector<CubicSegment> segs;
  if (keys.size() < 2) return segs;
  for (std::size_t k = 0; k + 1 < keys.size(); ++k) {
    const Keyframe& a = keys[k];
    const Keyframe& b = keys[k + 1];
    const double third = (b.t - a.t) / 3.0;
    const Handle out = a.out.value_or(Handle{third, slope(keys, k) * third});
    const Handle in = b.in.value_or(Handle{-third, -slope(keys, k + 1) * third});
    segs.push_back({{a.t, a.t + out.dt, b.t + in.dt, b.t}, {a.v, a.v + out.dv, b.v + in.dv, b.v}});
  }
  return segs;
}

}  // namespace

ClipError::ClipError(Kind kind, std::string path, const std::string& message)
    : std::runtime_error(path.empty() ? message : path + ": " + message), kind_(kind), path_(std::move(path)), detail_(message) {}

AnimationClip::AnimationClip(std::string name, std::vector<AnimationTrack> tracks)
    : name_(std::move(name)), tracks_(std::move(tracks)) {
  validate(name_, tracks_);
  for (const auto& tr : tracks_) {
    segments_.push_back(resolve(tr.keyframes));
    duration_ = std::max(duration_, tr.keyframes.back().t);
  }
}

bool AnimationClip::has_channel(std::string_view channel) const {
  return std::any_of(tracks_.begin(), tracks_.end(), [&](const auto& t) { return t.channel == channel; });
}

double AnimationClip::sample(std::string_view channel, double t) const {
  for (std::size_t i = 0; i < tracks_.size(); ++i) {
    if (tracks_[i].channel == channel) return sample_track(i, t);
  }
  throw ClipError(ClipError::Kind::UnknownChannel, "", "clip '" + name_ + "' has no channel '" + std::string(channel) + "'");
}

double AnimationClip::sample_track(std::size_t track, double t) const {
  const auto& keys = tracks_.at(track).keyframes;
  if (t <= keys.front().t) return keys.front().v;
  if (t >= keys.back().t) return keys.back().v;
  // First key strictly after t; the segment starts one before it.
  const auto it = std::upper_bound(keys.begin(), keys.end(), t, [](double x, const Keyframe& k) { return x < k.t; });
  const auto seg = static_cast<std::size_t>(it - keys.begin()) - 1;
  if (keys[seg].t == t) return keys[seg].v;
  return segments_[track][seg].sample(t);
}

namespace {

void require_keys(const json& obj, const std::string& path, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  for (const char* k : required) {
    if (!obj.contains(k)) schema_error(path, std::string("missing field '") + k + "'");
  }
  for (const auto& [k, _] : obj.items()) {
    const bool known = std::any_of(required.begin(), required.end(), [&](const char* r) { return k == r; }) ||
                       std::any_of(optional.begin(), optional.end(), [&](const char* o) { return k == o; });
    if (!known) schema_error(path + "/" + k, "unknown field");
  }
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  return j.get<double>();
}

Handle handle_at(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) schema_error(path, "handle must be [dt, dv]");
  return {number_at(j[0], path + "/0"), number_at(j[1], path + "/1")};
}

}  // namespace

AnimationClip parse_clip(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ClipError(ClipError::Kind::Syntax, "byte " + std::to_string(e.byte), e.what());
  }
  require_keys(doc, "", {"name", "tracks"}, {});
  if (!doc["name"].is_string()) schema_error("/name", "expected a string");
  if (!doc["tracks"].is_array()) schema_error("/tracks", "expected an array");

  std::vector<AnimationTrack> tracks;
  for (std::size_t i = 0; i < doc["tracks"].size(); ++i) {
    const json& jt = doc["tracks"][i];
    const std::string tpath = "/tracks/" + std::to_string(i);
    require_keys(jt, tpath, {"channel", "keyframes"}, {});
    if (!jt["channel"].is_string()) schema_error(tpath + "/channel", "expected a string");
    if (!jt["keyframes"].is_array()) schema_error(tpath + "/keyframes", "expected an array");
    AnimationTrack tr;
    tr.channel = jt["channel"].get<std::string>();
    for (std::size_t k = 0; k < jt["keyframes"].size(); ++k) {
      const json& jk = jt["keyframes"][k];
      const std::string kpath = key_path(i, k);
      require_keys(jk, kpath, {"t", "v"}, {"out", "in"});
      Keyframe kf;
      kf.t = number_at(jk["t"], kpath + "/t");
      kf.v = number_at(jk["v"], kpath + "/v");
      if (jk.contains("out")) kf.out = handle_at(jk["out"], kpath + "/out");
      if (jk.contains("in")) kf.in = handle_at(jk["in"], kpath + "/in");
      tr.keyframes.push_back(kf);
    }
    tracks.push_back(std::move(tr));
  }
  return AnimationClip(doc["name"].get<std::string>(), std::move(tracks));
}

std::string serialize_clip(const AnimationClip& clip) {
  json tracks = json::array();
  for (const auto& tr : clip.tracks()) {
    json keys = json::array();
    for (const auto& kf : tr.keyframes) {
      json jk = {{"t", kf.t}, {"v", kf.v}};
      if (kf.out) jk["out"] = {kf.out->dt, kf.out->dv};
      if (kf.in) jk["in"] = {kf.in->dt, kf.in->dv};
      keys.push_back(std::move(jk));
    }
    tracks.push_back({{"channel", tr.channel}, {"keyframes", std::move(keys)}});
  }
  return json{{"name", clip.name()}, {"tracks", std::move(tracks)}}.dump(2) + "\n";
}

}  // namespace sprite::animation
