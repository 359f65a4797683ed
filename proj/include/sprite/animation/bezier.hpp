#pragma once

#include <array>

namespace sprite::animation {

// One cubic segment of a track: control points (time, value), with the time
// coordinate monotone non-decreasing in the curve parameter.
struct CubicSegment {
  std::array<double, 4> time{};
  std::array<double, 4> value{};

  // Curve parameter u in [0, 1] whose time coordinate equals t, by bisection
  // run until the bracket stops shrinking.
  double parameter_at(double t) const;
  double value_at_parameter(double u) const;
  double time_at_parameter(double u) const;
  double sample(double t) const { return value_at_parameter(parameter_at(t)); }
};

}  // namespace sprite::animation
