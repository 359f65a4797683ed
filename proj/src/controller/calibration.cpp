#include "sprite/controller/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

namespace sprite::controller {

ServoCalibration ServoCalibration::from_span(int span_ticks, double span_deg, int center, int min_tick, int max_tick) {
  ServoCalibration c;
  c.ticksPerRadian = span_ticks / (span_deg * std::numbers::pi / 180.0);
  c.centerTick = center;
  c.minTick = min_tick;
  c.maxTick = max_tick;
  c.check();
  return c;
}

ServoCalibration ServoCalibration::standard() { return from_span(1024, 300.0, 512, 0, 1023); }

void ServoCalibration::check() const {
  if (!(ticksPerRadian > 0.0) || !std::isfinite(ticksPerRadian)) throw std::invalid_argument("ticksPerRadian must be positive");
  if (!(minTick < centerTick && centerTick < maxTick)) {
    throw std::invalid_argument("calibration needs minTick < centerTick < maxTick");
  }
}

ControllerConfig load_controller_config(const std::filesystem::path& geometry_file) {
  std::ifstream in(geometry_file);
  if (!in) throw std::runtime_error("cannot open " + geometry_file.string());
  const nlohmann::json doc = nlohmann::json::parse(in);
  ControllerConfig cfg;
  if (doc.contains("calibration")) {
    const auto& c = doc["calibration"];
    cfg.calibration = ServoCalibration::from_span(c.value("span_ticks", 1024), c.value("span_deg", 300.0),
                                                  c.value("center_tick", 512), c.value("min_tick", 0),
                                                  c.value("max_tick", 1023));
  }
  cfg.slewRate = doc.value("slew_rate_ticks_per_s", cfg.slewRate);
  if (!(cfg.slewRate > 0.0)) throw std::invalid_argument("slew rate must be positive");
  return cfg;
}

int angle_to_tick(double alpha, const ServoCalibration& c) {
  if (std::isnan(alpha)) return c.centerTick;
  const double raw = std::round(c.centerTick + alpha * c.ticksPerRadian);
  return static_cast<int>(std::clamp(raw, static_cast<double>(c.minTick), static_cast<double>(c.maxTick)));
}

double tick_to_angle(int tick, const ServoCalibration& c) { return (tick - c.centerTick) / c.ticksPerRadian; }

Ticks angles_to_ticks(const kinematics::ServoAngles& a, const ServoCalibration& c) {
  Ticks t{};
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = angle_to_tick(a.alpha[i], c);
  return t;
}

kinematics::ServoAngles ticks_to_angles(const Ticks& t, const ServoCalibration& c) {
  kinematics::ServoAngles a;
  for (std::size_t i = 0; i < t.size(); ++i) a.alpha[i] = tick_to_angle(t[i], c);
  return a;
}

}  // namespace sprite::controller
