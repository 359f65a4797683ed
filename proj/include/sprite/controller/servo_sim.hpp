#pragma once

#include <array>

#include "json.hpp"
#include "sprite/common/clock.hpp"
#include "sprite/controller/calibration.hpp"

namespace sprite::controller {

struct ControllerState {
  Ticks commandedTicks{};
  // Fractional: the slew rate moves less than a tick per step.
  std::array<double, kinematics::kLegs> actualTicks{};
  bool torqueEnabled = true;
  bool eStopLatched = false;
  bool eStopEngaged = false;  // the button itself
  double slewRate = 0.0;
  Nanos simTime = 0;
};

nlohmann::json to_json(const ControllerState& s);

// Servo dynamics and the e-stop state machine:
//   estop(true)   latch, torque off, button held
//   estop(false)  button released, still latched
//   enable        refused while the button is held; otherwise clears the latch, torque on
//   disable       torque off, no latch
class ServoSim {
 public:
  static constexpr Nanos kStep = 1'000'000;

  explicit ServoSim(ControllerConfig cfg);

  // Returns true if any value had to be clamped.
  bool command(const Ticks& ticks);
  void estop(bool engaged);
  bool enable();
  void disable();

  // One fixed step.
  void step();
  // Fixed steps until simTime reaches `now` (whole steps only).
  void advance_to(Nanos now);

  const ControllerState& state() const { return state_; }
  const ControllerConfig& config() const { return cfg_; }

 private:
  bool settled() const;

  ControllerConfig cfg_;
  ControllerState state_;
};

}  // namespace sprite::controller
