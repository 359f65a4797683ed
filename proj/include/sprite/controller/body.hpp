#pragma once

#include <chrono>
#include <mutex>
#include <string>

#include "sprite/controller/calibration.hpp"
#include "sprite/controller/controller_sim.hpp"
#include "sprite/controller/pipe.hpp"
#include "sprite/kinematics/validate.hpp"

namespace sprite::controller {

// Request/response line transport to a controller.
class Transport {
 public:
  virtual ~Transport() = default;
  // Throws std::runtime_error if the link is down.
  virtual std::string request(const std::string& line) = 0;
};

class LoopbackTransport : public Transport {
 public:
  explicit LoopbackTransport(ControllerSim& sim) : sim_(sim) {}
  std::string request(const std::string& line) override { return sim_.handle_line(line); }

 private:
  ControllerSim& sim_;
};

class PipeTransport : public Transport {
 public:
  explicit PipeTransport(LinePipe::End& host, std::chrono::milliseconds timeout = std::chrono::seconds(1))
      : host_(host), timeout_(timeout) {}
  std::string request(const std::string& line) override;

 private:
  LinePipe::End& host_;
  std::chrono::milliseconds timeout_;
  std::mutex mu_;
};

struct SendResult {
  bool sent = false;
  kinematics::ValidationResult validation;
  Ticks ticks{};
  std::string response;
};

// The kinematic half of the two-level limits: poses are validated before
// anything reaches the wire; the controller then clamps ticks on its own.
class BodyController {
 public:
  BodyController(kinematics::PlatformGeometry geom, ServoCalibration calib, Transport& link);

  SendResult send_pose(const kinematics::Pose6& pose);
  std::string send(const Command& cmd);

  std::size_t frames_sent() const;
  std::size_t poses_rejected() const;
  const kinematics::PlatformGeometry& geometry() const { return geom_; }

 private:
  kinematics::PlatformGeometry geom_;
  ServoCalibration calib_;
  Transport& link_;
  mutable std::mutex mu_;
  std::size_t sent_ = 0;
  std::size_t rejected_ = 0;
  std::int64_t seq_ = 0;
};

}  // namespace sprite::controller
