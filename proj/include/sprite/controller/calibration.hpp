#pragma once

#include <array>
#include <filesystem>

#include "sprite/kinematics/inverse.hpp"

namespace sprite::controller {

using Ticks = std::array<int, kinematics::kLegs>;

struct ServoCalibration {
  double ticksPerRadian = 0.0;
  int centerTick = 512;
  int minTick = 0;
  int maxTick = 1023;

  // span_ticks over span_deg of shaft travel.
  static ServoCalibration from_span(int span_ticks, double span_deg, int center, int min_tick, int max_tick);
  // 1024 ticks over 300 degrees, centre 512, full range 0..1023.
  static ServoCalibration standard();
  // Throws std::invalid_argument unless minTick < centerTick < maxTick and ticksPerRadian > 0.
  void check() const;
};

struct ControllerConfig {
  ServoCalibration calibration = ServoCalibration::standard();
  double slewRate = 1500.0;  // ticks per second
};

// Reads "calibration" and "slew_rate_ticks_per_s" from a geometry file; both
// optional, defaults otherwise.
ControllerConfig load_controller_config(const std::filesystem::path& geometry_file);

// round(centre + alpha * ticksPerRadian), clamped silently.
int angle_to_tick(double alpha, const ServoCalibration& c);
double tick_to_angle(int tick, const ServoCalibration& c);
Ticks angles_to_ticks(const kinematics::ServoAngles& a, const ServoCalibration& c);
kinematics::ServoAngles ticks_to_angles(const Ticks& t, const ServoCalibration& c);

}  // namespace sprite::controller
