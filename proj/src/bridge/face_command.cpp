#include "sprite/bridge/face_command.hpp"

#include <cmath>

namespace sprite::bridge {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& why) { throw FaceMessageError(why); }

bool finite(const Point3& p) { return std::isfinite(p[0]) && std::isfinite(p[1]) && std::isfinite(p[2]); }

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    bad(std::string("bad '") + key + "'");
  }
}

Point3 point_from(const json& j) {
  return {field<double>(j, "x"), field<double>(j, "y"), field<double>(j, "z")};
}

}  // namespace

bool is_valid_robot_id(std::string_view id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::string_view type_name(const FacePayload& p) {
  static constexpr std::string_view names[] = {"viseme", "action_units", "gaze", "look_reset",
                                               "face_config", "pose", "audio"};
  return names[p.index()];
}

void validate(const FaceCommand& cmd) {
  if (!is_valid_robot_id(cmd.robot)) bad("bad robot id '" + cmd.robot + "'");
  if (const auto* au = std::get_if<ActionUnitsMsg>(&cmd.payload)) {
    for (const auto& u : au->units) {
      if (!face::is_supported_action_unit(u.id)) bad("unsupported action unit " + std::to_string(u.id));
      if (!(u.intensity >= 0.0 && u.intensity <= 1.0)) bad("action unit intensity outside [0, 1]");
    }
  } else if (const auto* g = std::get_if<GazeMsg>(&cmd.payload)) {
    if (!finite(g->point)) bad("gaze point not finite");
    if (g->t && !std::isfinite(*g->t)) bad("gaze time not finite");
  } else if (const auto* p = std::get_if<PoseMsg>(&cmd.payload)) {
    if (!kinematics::is_finite(p->pose)) bad("pose not finite");
  } else if (const auto* c = std::get_if<FaceConfig>(&cmd.payload)) {
    for (const auto& [k, v] : c->sizes) {
      if (!std::isfinite(v) || v <= 0.0) bad("face size '" + k + "' must be positive");
    }
  } else if (const auto* a = std::get_if<AudioMsg>(&cmd.payload)) {
    if (!std::isfinite(a->duration) || a->duration < 0.0) bad("audio duration must be non-negative");
  }
}

nlohmann::json payload_to_json(const FacePayload& p) {
  return std::visit(
      [](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, VisemeMsg>) {
          return {{"viseme", face::to_string(m.viseme)}};
        } else if constexpr (std::is_same_v<T, ActionUnitsMsg>) {
          json units = json::array();
          for (const auto& u : m.units) {
            units.push_back({{"au", u.id}, {"side", face::to_string(u.side)}, {"intensity", u.intensity}});
          }
          return {{"units", units}, {"replace", m.replace}};
        } else if constexpr (std::is_same_v<T, GazeMsg>) {
          json j{{"x", m.point[0]}, {"y", m.point[1]}, {"z", m.point[2]}};
          if (!m.target.empty()) j["target"] = m.target;
          if (m.t) j["t"] = *m.t;
          return j;
        } else if constexpr (std::is_same_v<T, LookResetMsg>) {
          return json::object();
        } else if constexpr (std::is_same_v<T, FaceConfig>) {
          return {{"colors", m.colors}, {"pupil_shape", m.pupilShape}, {"sizes", m.sizes}};
        } else if constexpr (std::is_same_v<T, PoseMsg>) {
          return {{"x", m.pose.x},       {"y", m.pose.y},         {"z", m.pose.z},
                  {"roll", m.pose.roll}, {"pitch", m.pose.pitch}, {"yaw", m.pose.yaw}};
        } else {
          json j{{"state", m.start ? "start" : "stop"}};
          if (m.start) {
            j["duration"] = m.duration;
            j["key"] = m.key;
            j["sample_rate"] = m.sampleRate;
          }
          return j;
        }
      },
      p);
}

FacePayload payload_from_json(std::string_view type, const nlohmann::json& j) {
  if (!j.is_object()) bad("payload must be an object");
  if (type == "viseme") {
    const auto v = face::parse_viseme(field<std::string>(j, "viseme"));
    if (!v) bad("unknown viseme");
    return VisemeMsg{*v};
  }
  if (type == "action_units") {
    ActionUnitsMsg m;
    m.replace = j.value("replace", false);
    const json units = j.value("units", json::array());
    if (!units.is_array()) bad("'units' must be an array");
    for (const auto& u : units) {
      face::ActionUnit a;
      a.id = field<int>(u, "au");
      a.intensity = field<double>(u, "intensity");
      const auto side = face::parse_side(u.value("side", "both"));
      if (!side) bad("bad side");
      a.side = *side;
      m.units.push_back(a);
    }
    return m;
  }
  if (type == "gaze") {
    GazeMsg m;
    m.point = point_from(j);
    m.target = j.value("target", "");
    if (j.contains("t")) m.t = field<double>(j, "t");
    return m;
  }
  if (type == "look_reset") return LookResetMsg{};
  if (type == "face_config") {
    FaceConfig c;
    try {
      c.colors = j.value("colors", std::map<std::string, std::string>{});
      c.pupilShape = j.value("pupil_shape", c.pupilShape);
      c.sizes = j.value("sizes", std::map<std::string, double>{});
    } catch (const json::exception&) {
      bad("bad face_config");
    }
    return c;
  }
  if (type == "pose") {
    PoseMsg m;
    m.pose = {field<double>(j, "x"),    field<double>(j, "y"),     field<double>(j, "z"),
              field<double>(j, "roll"), field<double>(j, "pitch"), field<double>(j, "yaw")};
    return m;
  }
  if (type == "audio") {
    AudioMsg m;
    const auto state = field<std::string>(j, "state");
    if (state != "start" && state != "stop") bad("audio state must be start or stop");
    m.start = state == "start";
    if (m.start) {
      m.duration = field<double>(j, "duration");
      m.key = j.value("key", "");
      m.sampleRate = j.value("sample_rate", 0);
    }
    return m;
  }
  bad("unknown message type '" + std::string(type) + "'");
}

nlohmann::json envelope(const FaceCommand& cmd, std::uint64_t seq, bool replay) {
  json j{{"v", kFaceProtocolVersion},
         {"robot", cmd.robot},
         {"type", type_name(cmd.payload)},
         {"seq", seq},
         {"payload", payload_to_json(cmd.payload)}};
  if (replay) j["replay"] = true;
  return j;
}

FaceMessage parse_message(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("not JSON: ") + e.what());
  }
  if (!j.is_object()) bad("message must be an object");
  if (field<int>(j, "v") != kFaceProtocolVersion) bad("unsupported version");
  FaceMessage m;
  m.command.robot = field<std::string>(j, "robot");
  m.seq = field<std::uint64_t>(j, "seq");
  m.replay = j.value("replay", false);
  if (!j.contains("payload")) bad("missing 'payload'");
  m.command.payload = payload_from_json(field<std::string>(j, "type"), j["payload"]);
  validate(m.command);
  return m;
}

}  // namespace sprite::bridge
