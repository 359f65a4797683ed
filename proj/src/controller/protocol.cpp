#include "sprite/controller/protocol.hpp"

#include <limits>

#include "json.hpp"

namespace sprite::controller {

namespace {

using nlohmann::json;

[[noreturn]] void framing(const std::string& why) { throw FramingError(why); }

void only_keys(const json& j, std::initializer_list<const char*> allowed) {
  for (const auto& [k, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) framing("unexpected field '" + k + "'");
  }
}

}  // namespace

Command parse_frame(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    framing(std::string("not JSON: ") + e.what());
  }
  if (!j.is_object()) framing("frame must be a JSON object");
  if (j.contains("v") && (!j["v"].is_number_integer() || j["v"].get<int>() != kProtocolVersion)) {
    framing("unsupported protocol version");
  }
  if (!j.contains("cmd") || !j["cmd"].is_string()) framing("missing 'cmd'");
  const std::string cmd = j["cmd"].get<std::string>();

  if (cmd == "move") {
    only_keys(j, {"v", "cmd", "ticks", "seq"});
    if (!j.contains("ticks") || !j["ticks"].is_array() || j["ticks"].size() != kinematics::kLegs) {
      framing("move needs 'ticks': six integers");
    }
    MoveCmd m;
    for (std::size_t i = 0; i < kinematics::kLegs; ++i) {
      const json& t = j["ticks"][i];
      if (!t.is_number_integer()) framing("ticks must be integers");
      const auto v = t.get<std::int64_t>();
      if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) framing("tick out of int range");
      m.ticks[i] = static_cast<int>(v);
    }
    if (j.contains("seq")) {
      if (!j["seq"].is_number_integer()) framing("seq must be an integer");
      m.seq = j["seq"].get<std::int64_t>();
    }
    return m;
  }
  if (cmd == "estop") {
    only_keys(j, {"v", "cmd", "engaged"});
    EstopCmd e;
    if (j.contains("engaged")) {
      if (!j["engaged"].is_boolean()) framing("'engaged' must be a boolean");
      e.engaged = j["engaged"].get<bool>();
    }
    return e;
  }
  if (cmd == "enable") {
    only_keys(j, {"v", "cmd"});
    return EnableCmd{};
  }
  if (cmd == "disable") {
    only_keys(j, {"v", "cmd"});
    return DisableCmd{};
  }
  if (cmd == "state") {
    only_keys(j, {"v", "cmd"});
    return StateCmd{};
  }
  framing("unknown cmd '" + cmd + "'");
}

std::string encode_frame(const Command& cmd) {
  json j{{"v", kProtocolVersion}};
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, MoveCmd>) {
          j["cmd"] = "move";
          j["ticks"] = c.ticks;
          if (c.seq) j["seq"] = *c.seq;
        } else if constexpr (std::is_same_v<T, EstopCmd>) {
          j["cmd"] = "estop";
          j["engaged"] = c.engaged;
        } else if constexpr (std::is_same_v<T, EnableCmd>) {
          j["cmd"] = "enable";
        } else if constexpr (std::is_same_v<T, DisableCmd>) {
          j["cmd"] = "disable";
        } else {
          j["cmd"] = "state";
        }
      },
      cmd);
  return j.dump();
}

}  // namespace sprite::controller
