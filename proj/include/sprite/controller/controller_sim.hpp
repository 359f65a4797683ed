#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <stop_token>
#include <string>
#include <vector>

#include "sprite/common/clock.hpp"
#include "sprite/controller/pipe.hpp"
#include "sprite/controller/protocol.hpp"
#include "sprite/controller/servo_sim.hpp"

namespace sprite::controller {

struct TranscriptEntry {
  Nanos t = 0;
  bool inbound = true;
  std::string line;
};

// The simulated controller board: frames in, acknowledgements out. Physics
// catches up with the clock lazily, in fixed 1 ms steps, before every frame
// and snapshot.
class ControllerSim {
 public:
  ControllerSim(ControllerConfig cfg, std::shared_ptr<Clock> clock);

  std::string handle_line(std::string_view line);
  ControllerState snapshot();
  void advance();

  std::vector<TranscriptEntry> transcript() const;
  std::size_t frames_received() const;
  std::size_t moves_received() const;
  std::size_t framing_errors() const;

  // Serves frames from the device end until the host closes or stop.
  void serve(LinePipe::End& device, std::stop_token stop = {});

  Clock& clock() { return *clock_; }

 private:
  mutable std::mutex mu_;
  ServoSim sim_;
  std::shared_ptr<Clock> clock_;
  std::vector<TranscriptEntry> transcript_;
  std::size_t frames_ = 0;
  std::size_t moves_ = 0;
  std::size_t framing_errors_ = 0;
};

}  // namespace sprite::controller
