#include "sprite/animation/bezier.hpp"

namespace sprite::animation {

namespace {

// Power-basis form of a cubic Bernstein polynomial, Horner evaluation.
double horner(const std::array<double, 4>& p, double u) {
  const double c1 = 3.0 * (p[1] - p[0]);
  const double c2 = 3.0 * (p[0] - 2.0 * p[1] + p[2]);
  const double c3 = p[3] - p[0] + 3.0 * (p[1] - p[2]);
  return ((c3 * u + c2) * u + c1) * u + p[0];
}

}  // namespace

// The power basis does not reproduce the end control points exactly.
double CubicSegment::time_at_parameter(double u) const {
  if (u <= 0.0) return time[0];
  if (u >= 1.0) return time[3];
  return horner(time, u);
}

double CubicSegment::value_at_parameter(double u) const {
  if (u <= 0.0) return value[0];
  if (u >= 1.0) return value[3];
  return horner(value, u);
}

double CubicSegment::parameter_at(double t) const {
  if (t <= time[0]) return 0.0;
  if (t >= time[3]) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (time_at_parameter(mid) < t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace sprite::animation
