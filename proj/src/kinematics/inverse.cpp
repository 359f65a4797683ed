#include "sprite/kinematics/inverse.hpp"

#include <cmath>
#include <string>

namespace sprite::kinematics {

std::string_view to_string(LegFailure failure) {
  switch (failure) {
    case LegFailure::None: return "ok";
    case LegFailure::NonFinite: return "non-finite";
    case LegFailure::Unreachable: return "unreachable";
    case LegFailure::OutOfRange: return "out-of-range";
  }
  return "?";
}

bool IkSolution::ok() const { return first_failure() == kLegs; }

std::size_t IkSolution::first_failure() const {
  for (std::size_t i = 0; i < kLegs; ++i) {
    if (legs[i] != LegFailure::None) return i;
  }
  return kLegs;
}

IkError::IkError(LegFailure kind, std::size_t leg)
    : std::runtime_error("leg " + std::to_string(leg) + ": " + std::string(to_string(kind))), kind_(kind), leg_(leg) {}

LegFailure solve_leg(const PlatformGeometry& g, std::size_t leg, const Vec3& anchor, double& alpha) {
  const Vec3 l = anchor - g.baseAnchors[leg];
  const double h = g.hornLength;
  const double d = g.rodLength;
  const double heading = g.servoAxisAngles[leg];

  const double L = l.squaredNorm() + h * h - d * d;
  const double M = 2.0 * h * l.z();
  const double N = 2.0 * h * (std::cos(heading) * l.x() + std::sin(heading) * l.y());
  const double rho = std::hypot(M, N);
  if (!std::isfinite(L) || !std::isfinite(rho)) return LegFailure::NonFinite;
  if (rho == 0.0 || std::abs(L) > rho) return LegFailure::Unreachable;

  const double elevation = normalize_angle(std::asin(L / rho) - std::atan2(N, M));
  alpha = g.hornDirection[leg] * elevation;
  if (alpha < g.servoMin || alpha > g.servoMax) return LegFailure::OutOfRange;
  return LegFailure::None;
}

IkSolution solve_ik(const Pose6& pose, const PlatformGeometry& geom) {
  IkSolution sol;
  if (!is_finite(pose)) {
    sol.legs.fill(LegFailure::NonFinite);
    return sol;
  }
  const Mat3 rot = rotation(pose);
  for (std::size_t i = 0; i < kLegs; ++i) {
    double alpha = 0.0;
    sol.legs[i] = solve_leg(geom, i, platform_point(geom, i, pose, rot), alpha);
    sol.angles.alpha[i] = sol.legs[i] == LegFailure::None ? alpha : 0.0;
  }
  return sol;
}

ServoAngles inverse_kinematics(const Pose6& pose, const PlatformGeometry& geom) {
  IkSolution sol = solve_ik(pose, geom);
  const std::size_t bad = sol.first_failure();
  if (bad != kLegs) throw IkError(sol.legs[bad], bad);
  return sol.angles;
}

}  // namespace sprite::kinematics
