#include "sprite/controller/controller_sim.hpp"

namespace sprite::controller {

namespace {

nlohmann::json ack(const char* what) { return {{"v", kProtocolVersion}, {"ack", what}, {"ok", true}}; }

}  // namespace

ControllerSim::ControllerSim(ControllerConfig cfg, std::shared_ptr<Clock> clock)
    : sim_(cfg), clock_(std::move(clock)) {}

std::string ControllerSim::handle_line(std::string_view line) {
  std::lock_guard lock(mu_);
  const Nanos now = clock_->now();
  sim_.advance_to(now);
  transcript_.push_back({now, true, std::string(line)});
  ++frames_;

  nlohmann::json reply;
  try {
    const Command cmd = parse_frame(line);
    if (const auto* m = std::get_if<MoveCmd>(&cmd)) {
      ++moves_;
      reply = ack("move");
      reply["clamped"] = sim_.command(m->ticks);
      if (m->seq) reply["seq"] = *m->seq;
      // Acknowledged even when e-stopped; the board stays powered over USB.
      reply["torque_enabled"] = sim_.state().torqueEnabled;
    } else if (const auto* e = std::get_if<EstopCmd>(&cmd)) {
      sim_.estop(e->engaged);
      reply = ack("estop");
      reply["engaged"] = e->engaged;
    } else if (std::holds_alternative<EnableCmd>(cmd)) {
      reply = ack("enable");
      if (!sim_.enable()) {
        reply["ok"] = false;
        reply["error"] = "estop engaged";
      }
    } else if (std::holds_alternative<DisableCmd>(cmd)) {
      sim_.disable();
      reply = ack("disable");
    } else {
      reply = ack("state");
      reply["state"] = to_json(sim_.state());
    }
  } catch (const FramingError& e) {
    ++framing_errors_;
    reply = {{"v", kProtocolVersion}, {"ok", false}, {"error", "framing"}, {"detail", e.what()}};
  }
  std::string out = reply.dump();
  transcript_.push_back({now, false, out});
  return out;
}

ControllerState ControllerSim::snapshot() {
  std::lock_guard lock(mu_);
  sim_.advance_to(clock_->now());
  return sim_.state();
}

void ControllerSim::advance() {
  std::lock_guard lock(mu_);
  sim_.advance_to(clock_->now());
}

std::vector<TranscriptEntry> ControllerSim::transcript() const {
  std::lock_guard lock(mu_);
  return transcript_;
}

std::size_t ControllerSim::frames_received() const {
  std::lock_guard lock(mu_);
  return frames_;
}

std::size_t ControllerSim::moves_received() const {
  std::lock_guard lock(mu_);
  return moves_;
}

std::size_t ControllerSim::framing_errors() const {
  std::lock_guard lock(mu_);
  return framing_errors_;
}

void ControllerSim::serve(LinePipe::End& device, std::stop_token stop) {
  while (auto line = device.read_line(stop)) device.write(handle_line(*line) + "\n");
}

}  // namespace sprite::controller
