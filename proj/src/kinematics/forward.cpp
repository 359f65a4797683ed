#include "sprite/kinematics/forward.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

namespace sprite::kinematics {

NoConvergence::NoConvergence(int iterations, double residual)
    : std::runtime_error("forward kinematics did not converge after " + std::to_string(iterations) +
                         " iterations (residual " + std::to_string(residual) + ")"),
      iterations_(iterations),
      residual_(residual) {}

namespace {

using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

struct Tips {
  std::array<Vec3, kLegs> p;
};

Tips horn_tips(const ServoAngles& angles, const PlatformGeometry& g) {
  Tips t;
  for (std::size_t i = 0; i < kLegs; ++i) t.p[i] = horn_tip(g, i, angles.alpha[i]);
  return t;
}

Vec6 residuals(const Tips& tips, const PlatformGeometry& g, const Pose6& pose) {
  const Mat3 rot = rotation(pose);
  const double d2 = g.rodLength * g.rodLength;
  Vec6 r;
  for (std::size_t i = 0; i < kLegs; ++i) {
    r[static_cast<Eigen::Index>(i)] = (platform_point(g, i, pose, rot) - tips.p[i]).squaredNorm() - d2;
  }
  return r;
}

Mat6 jacobian(const Tips& tips, const PlatformGeometry& g, const Pose6& pose) {
  const Mat3 rot = rotation(pose);
  const auto dr = rotation_derivatives(pose);
  Mat6 jac;
  for (std::size_t i = 0; i < kLegs; ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    const Vec3 diff = 2.0 * (platform_point(g, i, pose, rot) - tips.p[i]);
    jac.block<1, 3>(row, 0) = diff.transpose();
    for (int k = 0; k < 3; ++k) jac(row, 3 + k) = diff.dot(dr[static_cast<std::size_t>(k)] * g.platformAnchors[i]);
  }
  return jac;
}

Pose6 step(const Pose6& p, const Vec6& delta, double scale) {
  return {p.x + scale * delta[0],    p.y + scale * delta[1],     p.z + scale * delta[2],
          p.roll + scale * delta[3], p.pitch + scale * delta[4], p.yaw + scale * delta[5]};
}

}  // namespace

std::array<double, kLegs> leg_residuals(const ServoAngles& angles, const PlatformGeometry& geom, const Pose6& pose) {
  const Vec6 r = residuals(horn_tips(angles, geom), geom, pose);
  std::array<double, kLegs> out{};
  for (std::size_t i = 0; i < kLegs; ++i) out[i] = r[static_cast<Eigen::Index>(i)];
  return out;
}

FkResult solve_fk(const ServoAngles& angles, const PlatformGeometry& geom, const Pose6& guess,
                  const FkOptions& options) {
  const Tips tips = horn_tips(angles, geom);
  Pose6 pose = guess;
  Vec6 r = residuals(tips, geom, pose);
  double norm = r.norm();
  int iter = 0;
  while (!(norm <= options.tolerance)) {
    if (iter >= options.maxIterations || !std::isfinite(norm)) throw NoConvergence(iter, norm);
    ++iter;
    const Vec6 delta = jacobian(tips, geom, pose).partialPivLu().solve(-r);
    double scale = 1.0;
    const double tstep = delta.head<3>().cwiseAbs().maxCoeff();
    const double rstep = delta.tail<3>().cwiseAbs().maxCoeff();
    if (tstep > options.maxTranslationStep) scale = std::min(scale, options.maxTranslationStep / tstep);
    if (rstep > options.maxRotationStep) scale = std::min(scale, options.maxRotationStep / rstep);
    Pose6 trial = step(pose, delta, scale);
    Vec6 rt = residuals(tips, geom, trial);
    for (int halvings = 0; halvings < 40 && !(rt.norm() < norm); ++halvings) {
      scale *= 0.5;
      trial = step(pose, delta, scale);
      rt = residuals(tips, geom, trial);
    }
    if (!(rt.norm() < norm)) throw NoConvergence(iter, norm);
    pose = trial;
    r = rt;
    norm = rt.norm();
  }
  return {normalized(pose), iter, norm};
}

Pose6 forward_kinematics(const ServoAngles& angles, const PlatformGeometry& geom, const Pose6& guess) {
  return solve_fk(angles, geom, guess).pose;
}

}  // namespace sprite::kinematics
