#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sprite/common/face.hpp"
#include "sprite/kinematics/pose.hpp"

namespace sprite::bridge {

inline constexpr int kFaceProtocolVersion = 1;

using Point3 = std::array<double, 3>;

struct VisemeMsg {
  face::Viseme viseme = face::Viseme::Sil;
};

// replace = true: units not listed return to zero. clear = true: everything off.
struct ActionUnitsMsg {
  std::vector<face::ActionUnit> units;
  bool replace = false;
};

// Metres, face frame: x right, y up, z out of the screen.
struct GazeMsg {
  Point3 point{};
  std::string target;
  std::optional<double> t;
};

struct LookResetMsg {};

struct FaceConfig {
  std::map<std::string, std::string> colors;
  std::string pupilShape = "round";
  std::map<std::string, double> sizes;

  bool operator==(const FaceConfig&) const = default;
};

// Platform pose for preview clients.
struct PoseMsg {
  kinematics::Pose6 pose;
};

struct AudioMsg {
  bool start = true;
  double duration = 0.0;
  std::string key;
  int sampleRate = 0;
};

using FacePayload = std::variant<VisemeMsg, ActionUnitsMsg, GazeMsg, LookResetMsg, FaceConfig, PoseMsg, AudioMsg>;

struct FaceCommand {
  std::string robot;
  FacePayload payload;
};

class FaceMessageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lower-case letters, digits, '-' and '_', 1 to 64 characters.
bool is_valid_robot_id(std::string_view id);

std::string_view type_name(const FacePayload& p);

// Throws FaceMessageError: intensity outside [0, 1], unsupported AU,
// non-finite gaze or pose, bad robot id.
void validate(const FaceCommand& cmd);

nlohmann::json payload_to_json(const FacePayload& p);
FacePayload payload_from_json(std::string_view type, const nlohmann::json& payload);

// {"v":1, "robot", "type", "seq", "payload"} plus "replay": true for state
// replayed to a joining client.
nlohmann::json envelope(const FaceCommand& cmd, std::uint64_t seq, bool replay = false);

struct FaceMessage {
  FaceCommand command;
  std::uint64_t seq = 0;
  bool replay = false;
};

// Throws FaceMessageError for anything that is not a valid envelope.
FaceMessage parse_message(std::string_view text);

}  // namespace sprite::bridge
