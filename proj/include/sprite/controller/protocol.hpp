#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "sprite/controller/calibration.hpp"

// Newline-delimited JSON frames between host and servo controller; see
// docs/controller-protocol.md.
namespace sprite::controller {

inline constexpr int kProtocolVersion = 1;

struct MoveCmd {
  Ticks ticks{};
  std::optional<std::int64_t> seq;
  bool operator==(const MoveCmd&) const = default;
};
struct EstopCmd {
  bool engaged = true;
  bool operator==(const EstopCmd&) const = default;
};
struct EnableCmd {
  bool operator==(const EnableCmd&) const = default;
};
struct DisableCmd {
  bool operator==(const DisableCmd&) const = default;
};
struct StateCmd {
  bool operator==(const StateCmd&) const = default;
};

using Command = std::variant<MoveCmd, EstopCmd, EnableCmd, DisableCmd, StateCmd>;

class FramingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One frame without its newline. Throws FramingError.
Command parse_frame(std::string_view line);
std::string encode_frame(const Command& cmd);

}  // namespace sprite::controller
