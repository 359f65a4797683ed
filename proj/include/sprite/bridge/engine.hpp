#pragma once

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "sprite/animation/library.hpp"
#include "sprite/bridge/broker.hpp"
#include "sprite/bridge/config.hpp"
#include "sprite/bridge/gaze.hpp"
#include "sprite/controller/body.hpp"
#include "sprite/controller/controller_sim.hpp"
#include "sprite/dialogue/cache.hpp"
#include "sprite/dialogue/executor.hpp"
#include "sprite/dialogue/expression.hpp"
#include "sprite/dialogue/library.hpp"

namespace sprite::bridge {

struct EngineOptions {
  BridgeConfig config;
  std::shared_ptr<Clock> clock;  // null: steady clock
  // null: HTTP client when config.ttsEndpoint is set, stub voice otherwise.
  std::shared_ptr<dialogue::TtsClient> tts;
};

struct PoseOutcome {
  kinematics::ValidationResult validation;
  std::future<dialogue::ExecutionReport> run;  // invalid when rejected
};

// Everything one process needs: per robot an executor, a simulated
// controller behind a body controller, a gaze tracker, and the face broker.
class Engine {
 public:
  explicit Engine(EngineOptions opts);
  ~Engine();

  std::future<dialogue::ExecutionReport> say(const std::string& robot, const std::string& request);
  // Throws std::out_of_range for unknown clips.
  std::future<dialogue::ExecutionReport> play(const std::string& robot, const std::string& clip);
  PoseOutcome pose(const std::string& robot, const kinematics::Pose6& p);

  // Synthesizes every library entry into the cache; returns how many were new.
  std::size_t prefetch(const dialogue::DialogueLibrary& library);

  Broker& broker() { return broker_; }
  GazeTracker& gaze(const std::string& robot);
  controller::ControllerSim& controller(const std::string& robot);
  controller::BodyController& body(const std::string& robot);
  dialogue::Executor& executor(const std::string& robot);

  dialogue::TtsClient& tts() { return *tts_; }
  dialogue::SpeechCache& cache() { return cache_; }
  const dialogue::DialogueLibrary& library() const { return library_; }
  const animation::ClipLibrary& clips() const { return clips_; }
  const kinematics::PlatformGeometry& geometry() const { return geometry_; }
  const BridgeConfig& config() const { return cfg_; }
  Clock& clock() { return *clock_; }

 private:
  struct Robot;
  Robot& robot(const std::string& id);
  dialogue::ScheduleDeps deps();

  BridgeConfig cfg_;
  std::shared_ptr<Clock> clock_;
  std::shared_ptr<dialogue::TtsClient> tts_;
  dialogue::SpeechCache cache_;
  kinematics::PlatformGeometry geometry_;
  controller::ControllerConfig controllerCfg_;
  animation::ClipLibrary clips_;
  dialogue::ExpressionRegistry expressions_;
  dialogue::DialogueLibrary library_;
  Broker broker_;

  std::mutex mu_;
  std::map<std::string, std::unique_ptr<Robot>> robots_;
};

}  // namespace sprite::bridge
