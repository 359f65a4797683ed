#include "sprite/controller/body.hpp"

#include <stdexcept>

namespace sprite::controller {

std::string PipeTransport::request(const std::string& line) {
  std::lock_guard lock(mu_);
  host_.write(line + "\n");
  auto reply = host_.read_line_for(timeout_);
  if (!reply) throw std::runtime_error("controller did not answer within the timeout");
  return *reply;
}

BodyController::BodyController(kinematics::PlatformGeometry geom, ServoCalibration calib, Transport& link)
    : geom_(std::move(geom)), calib_(calib), link_(link) {
  calib_.check();
}

SendResult BodyController::send_pose(const kinematics::Pose6& pose) {
  SendResult r;
  r.validation = kinematics::validate_pose(pose, geom_);
  if (!r.validation.valid) {
    std::lock_guard lock(mu_);
    ++rejected_;
    return r;
  }
  r.ticks = angles_to_ticks(r.validation.angles, calib_);
  MoveCmd m{r.ticks, {}};
  {
    std::lock_guard lock(mu_);
    m.seq = ++seq_;
  }
  r.response = send(m);
  r.sent = true;
  return r;
}

std::string BodyController::send(const Command& cmd) {
  std::string reply = link_.request(encode_frame(cmd));
  std::lock_guard lock(mu_);
  ++sent_;
  return reply;
}

std::size_t BodyController::frames_sent() const {
  std::lock_guard lock(mu_);
  return sent_;
}

std::size_t BodyController::poses_rejected() const {
  std::lock_guard lock(mu_);
  return rejected_;
}

}  // namespace sprite::controller
