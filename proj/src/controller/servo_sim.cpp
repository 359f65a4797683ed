#include "sprite/controller/servo_sim.hpp"

#include <algorithm>
#include <cmath>

namespace sprite::controller {

nlohmann::json to_json(const ControllerState& s) {
  return {{"commanded_ticks", s.commandedTicks},
          {"actual_ticks", s.actualTicks},
          {"torque_enabled", s.torqueEnabled},
          {"estop_latched", s.eStopLatched},
          {"estop_engaged", s.eStopEngaged},
          {"slew_rate", s.slewRate},
          {"sim_time_ns", s.simTime}};
}

ServoSim::ServoSim(ControllerConfig cfg) : cfg_(cfg) {
  cfg_.calibration.check();
  state_.commandedTicks.fill(cfg_.calibration.centerTick);
  state_.actualTicks.fill(cfg_.calibration.centerTick);
  state_.slewRate = cfg_.slewRate;
}

bool ServoSim::command(const Ticks& ticks) {
  bool clamped = false;
  for (std::size_t i = 0; i < ticks.size(); ++i) {
    const int v = std::clamp(ticks[i], cfg_.calibration.minTick, cfg_.calibration.maxTick);
    clamped = clamped || v != ticks[i];
    state_.commandedTicks[i] = v;
  }
  return clamped;
}

void ServoSim::estop(bool engaged) {
  state_.eStopEngaged = engaged;
  if (engaged) {
    state_.eStopLatched = true;
    state_.torqueEnabled = false;
  }
}

bool ServoSim::enable() {
  if (state_.eStopEngaged) return false;
  state_.eStopLatched = false;
  state_.torqueEnabled = true;
  return true;
}

void ServoSim::disable() { state_.torqueEnabled = false; }

void ServoSim::step() {
  state_.simTime += kStep;
  if (!state_.torqueEnabled) return;
  const double max_move = state_.slewRate * to_seconds(kStep);
  for (std::size_t i = 0; i < state_.actualTicks.size(); ++i) {
    const double diff = state_.commandedTicks[i] - state_.actualTicks[i];
    state_.actualTicks[i] += std::clamp(diff, -max_move, max_move);
  }
}

bool ServoSim::settled() const {
  if (!state_.torqueEnabled) return true;
  for (std::size_t i = 0; i < state_.actualTicks.size(); ++i) {
    if (state_.actualTicks[i] != state_.commandedTicks[i]) return false;
  }
  return true;
}

void ServoSim::advance_to(Nanos now) {
  while (state_.simTime + kStep <= now) {
    if (settled()) {
      // Nothing moves; skip the remaining whole steps at once.
      state_.simTime += (now - state_.simTime) / kStep * kStep;
      return;
    }
    step();
  }
}

}  // namespace sprite::controller
