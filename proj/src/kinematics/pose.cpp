#include "sprite/kinematics/pose.hpp"

#include <algorithm>
#include <cmath>

namespace sprite::kinematics {

std::array<double, 6> to_array(const Pose6& pose) {
  return {pose.x, pose.y, pose.z, pose.roll, pose.pitch, pose.yaw};
}

Pose6 from_array(const std::array<double, 6>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }

bool is_finite(const Pose6& pose) {
  for (double v : to_array(pose)) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double normalize_angle(double angle) {
  double a = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

Pose6 normalized(Pose6 pose) {
  pose.roll = normalize_angle(pose.roll);
  pose.pitch = normalize_angle(pose.pitch);
  pose.yaw = normalize_angle(pose.yaw);
  return pose;
}

namespace {

Mat3 rot_x(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Mat3 m;
  m << 1, 0, 0, 0, c, -s, 0, s, c;
  return m;
}

Mat3 rot_y(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Mat3 m;
  m << c, 0, s, 0, 1, 0, -s, 0, c;
  return m;
}

Mat3 rot_z(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Mat3 m;
  m << c, -s, 0, s, c, 0, 0, 0, 1;
  return m;
}

Mat3 d_rot_x(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Mat3 m;
  m << 0, 0, 0, 0, -s, -c, 0, c, -s;
  return m;
}

Mat3 d_rot_y(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Mat3 m;
  m << -s, 0, c, 0, 0, 0, -c, 0, -s;
  return m;
}

Mat3 d_rot_z(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Mat3 m;
  m << -s, -c, 0, c, -s, 0, 0, 0, 0;
  return m;
}

}  // namespace

Mat3 rotation(double roll, double pitch, double yaw) { return rot_x(roll) * rot_y(pitch) * rot_z(yaw); }

Mat3 rotation(const Pose6& pose) { return rotation(pose.roll, pose.pitch, pose.yaw); }

std::array<Mat3, 3> rotation_derivatives(const Pose6& p) {
  const Mat3 rx = rot_x(p.roll), ry = rot_y(p.pitch), rz = rot_z(p.yaw);
  return {d_rot_x(p.roll) * ry * rz, rx * d_rot_y(p.pitch) * rz, rx * ry * d_rot_z(p.yaw)};
}

double tilt_from_vertical(const Pose6& pose) {
  // z component of R * e_z; yaw does not move the normal.
  const double nz = std::cos(pose.roll) * std::cos(pose.pitch);
  return std::acos(std::clamp(nz, -1.0, 1.0));
}

}  // namespace sprite::kinematics
