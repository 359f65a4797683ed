#include "sprite/kinematics/validate.hpp"

namespace sprite::kinematics {

namespace {

int severity(LegFailure f) {
  switch (f) {
    case LegFailure::None: return 0;
    case LegFailure::OutOfRange: return 1;
    case LegFailure::Unreachable: return 2;
    case LegFailure::NonFinite: return 3;
  }
  return 0;
}

}  // namespace

ValidationResult validate_pose(const Pose6& pose, const PlatformGeometry& geom) {
  const IkSolution sol = solve_ik(pose, geom);
  ValidationResult r;
  r.legs = sol.legs;
  r.angles = sol.angles;
  for (LegFailure f : sol.legs) {
    if (severity(f) > severity(r.reason)) r.reason = f;
  }
  r.valid = r.reason == LegFailure::None;
  return r;
}

std::string ValidationResult::describe() const {
  if (valid) return "valid";
  std::string out = "invalid (" + std::string(to_string(reason)) + "):";
  for (std::size_t i = 0; i < kLegs; ++i) {
    if (legs[i] != LegFailure::None) out += " leg " + std::to_string(i) + " " + std::string(to_string(legs[i])) + ";";
  }
  out.pop_back();
  return out;
}

}  // namespace sprite::kinematics
