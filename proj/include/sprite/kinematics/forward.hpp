#pragma once

#include <array>
#include <stdexcept>

#include "sprite/kinematics/geometry.hpp"
#include "sprite/kinematics/inverse.hpp"
#include "sprite/kinematics/pose.hpp"

namespace sprite::kinematics {

class NoConvergence : public std::runtime_error {
 public:
  NoConvergence(int iterations, double residual);

  int iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  int iterations_;
  double residual_;
};

struct FkOptions {
  int maxIterations = 100;
  // Bound on the Euclidean norm of the six squared-distance residuals.
  double tolerance = 1e-10;
  // Trust region: a Newton step is scaled down so that neither its
  // translation nor its rotation part exceeds these bounds.
  double maxTranslationStep = 0.01;
  double maxRotationStep = 0.1;
};

struct FkResult {
  Pose6 pose;
  int iterations = 0;
  double residualNorm = 0.0;
};

// |platform_i(pose) - hornTip_i(alpha_i)|^2 - rodLength^2 for each leg.
std::array<double, kLegs> leg_residuals(const ServoAngles& angles, const PlatformGeometry& geom,
                                        const Pose6& pose);

// Damped Newton on leg_residuals with an analytic Jacobian. The step is
// halved while the residual norm grows. Throws NoConvergence.
FkResult solve_fk(const ServoAngles& angles, const PlatformGeometry& geom, const Pose6& guess = {},
                  const FkOptions& options = {});

Pose6 forward_kinematics(const ServoAngles& angles, const PlatformGeometry& geom, const Pose6& guess = {});

}  // namespace sprite::kinematics
