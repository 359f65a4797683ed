#include "sprite/bridge/engine.hpp"

#include <stdexcept>

#include "sprite/dialogue/http_tts.hpp"
#include "sprite/dialogue/schedule.hpp"
#include "sprite/dialogue/tts.hpp"

namespace sprite::bridge {

namespace {

class FaceAdapter : public dialogue::FaceSink {
 public:
  FaceAdapter(Broker& broker, std::string robot) : broker_(broker), robot_(std::move(robot)) {}

  void viseme(face::Viseme v) override { send(VisemeMsg{v}); }
  void action_units(const std::vector<face::ActionUnit>& units, bool replace) override {
    send(ActionUnitsMsg{units, replace});
  }
  void gaze(const dialogue::Point3& target) override { send(GazeMsg{target, {}, {}}); }
  void look_reset() override { send(LookResetMsg{}); }
  void neutral() override {
    send(ActionUnitsMsg{{}, true});
    send(VisemeMsg{face::Viseme::Sil});
  }

 private:
  void send(FacePayload p) { broker_.publish({robot_, std::move(p)}); }

  Broker& broker_;
  std::string robot_;
};

class BodyAdapter : public dialogue::BodySink {
 public:
  BodyAdapter(controller::BodyController& body, Broker& broker, std::string robot)
      : body_(body), broker_(broker), robot_(std::move(robot)) {}

  void pose(const kinematics::Pose6& p) override {
    // Invalid frames are dropped here; the controller never sees them.
    if (body_.send_pose(p).sent) broker_.publish({robot_, PoseMsg{p}});
  }
  // The controller holds its last commanded position.
  void stop() override {}

 private:
  controller::BodyController& body_;
  Broker& broker_;
  std::string robot_;
};

class AudioAdapter : public dialogue::AudioSink {
 public:
  AudioAdapter(Broker& broker, std::string robot) : broker_(broker), robot_(std::move(robot)) {}

  void start(const dialogue::SpeechTiming& speech) override {
    AudioMsg m;
    m.duration = speech.duration;
    m.sampleRate = speech.sampleRate;
    if (speech.audio && !speech.audio->empty()) m.key = dialogue::sha256_hex(speech.audio->data(), speech.audio->size());
    broker_.publish({robot_, m});
  }
  void stop() override { broker_.publish({robot_, AudioMsg{false, 0.0, {}, 0}}); }

 private:
  Broker& broker_;
  std::string robot_;
};

}  // namespace

struct Engine::Robot {
  Robot(const std::string& id, Engine& e)
      : sim(e.controllerCfg_, e.clock_),
        link(sim),
        body(e.geometry_, e.controllerCfg_.calibration, link),
        gaze(id, [&b = e.broker_](const FaceCommand& c) { b.publish(c); }) {
    dialogue::Sinks sinks{std::make_shared<FaceAdapter>(e.broker_, id),
                          std::make_shared<BodyAdapter>(body, e.broker_, id),
                          std::make_shared<AudioAdapter>(e.broker_, id)};
    executor = std::make_unique<dialogue::Executor>(id, std::move(sinks), e.clock_);
  }

  controller::ControllerSim sim;
  controller::LoopbackTransport link;
  controller::BodyController body;
  GazeTracker gaze;
  // Declared last so its worker stops before the sinks' targets go away.
  std::unique_ptr<dialogue::Executor> executor;
};

Engine::Engine(EngineOptions opts)
    : cfg_(std::move(opts.config)),
      clock_(opts.clock ? std::move(opts.clock) : std::make_shared<SteadyClock>()),
      tts_(std::move(opts.tts)),
      cache_(cfg_.cacheDir),
      geometry_(kinematics::load_geometry(cfg_.geometry)),
      controllerCfg_(controller::load_controller_config(cfg_.geometry)),
      expressions_(cfg_.expressions.empty() ? dialogue::ExpressionRegistry::standard()
                                            : dialogue::ExpressionRegistry::load(cfg_.expressions)) {
  if (!tts_) {
    if (cfg_.ttsEndpoint.empty()) {
      tts_ = std::make_shared<dialogue::StubTts>();
    } else {
      tts_ = std::make_shared<dialogue::HttpTtsClient>(cfg_.ttsEndpoint);
    }
  }
  if (!cfg_.clipDir.empty() && std::filesystem::is_directory(cfg_.clipDir)) {
    clips_ = animation::ClipLibrary::load_directory(cfg_.clipDir);
  }
  if (!cfg_.library.empty() && std::filesystem::exists(cfg_.library)) {
    library_ = dialogue::DialogueLibrary::load(cfg_.library);
  }
  for (const auto& r : cfg_.robots) robot(r);
}

Engine::~Engine() {
  std::lock_guard lock(mu_);
  robots_.clear();
}

Engine::Robot& Engine::robot(const std::string& id) {
  if (!is_valid_robot_id(id)) throw std::invalid_argument("bad robot id '" + id + "'");
  std::lock_guard lock(mu_);
  auto& r = robots_[id];
  if (!r) r = std::make_unique<Robot>(id, *this);
  return *r;
}

dialogue::ScheduleDeps Engine::deps() {
  dialogue::ScheduleDeps d;
  d.clips = &clips_;
  d.expressions = &expressions_;
  d.tts = tts_.get();
  d.cache = &cache_;
  d.voice = cfg_.voice;
  return d;
}

std::future<dialogue::ExecutionReport> Engine::say(const std::string& id, const std::string& request) {
  Robot& r = robot(id);
  const dialogue::DialogueAction action = dialogue::resolve(request, library_);
  dialogue::Plan plan = dialogue::compile(dialogue::schedule(action, deps()), dialogue::kDefaultFrameRate, request);
  return r.executor->submit(std::move(plan));
}

std::future<dialogue::ExecutionReport> Engine::play(const std::string& id, const std::string& clip) {
  Robot& r = robot(id);
  const animation::AnimationClip* c = clips_.find(clip);
  if (!c) throw std::out_of_range("unknown clip '" + clip + "'");
  return r.executor->submit(dialogue::animation_plan(*c));
}

PoseOutcome Engine::pose(const std::string& id, const kinematics::Pose6& p) {
  Robot& r = robot(id);
  PoseOutcome out;
  out.validation = kinematics::validate_pose(p, geometry_);
  if (out.validation.valid) out.run = r.executor->submit(dialogue::pose_plan(p));
  return out;
}

std::size_t Engine::prefetch(const dialogue::DialogueLibrary& library) {
  std::size_t added = 0;
  for (const auto& key : library.keys()) {
    const dialogue::DialogueAction& action = library.find(key)->action;
    const std::string cacheKey = dialogue::SpeechCache::key(cfg_.voice, action.speech_text());
    const bool had = cache_.contains(cacheKey);
    dialogue::synthesize(action, tts_.get(), &cache_, cfg_.voice);
    if (!had && cache_.contains(cacheKey)) ++added;
  }
  return added;
}

GazeTracker& Engine::gaze(const std::string& id) { return robot(id).gaze; }
controller::ControllerSim& Engine::controller(const std::string& id) { return robot(id).sim; }
controller::BodyController& Engine::body(const std::string& id) { return robot(id).body; }
dialogue::Executor& Engine::executor(const std::string& id) { return *robot(id).executor; }

}  // namespace sprite::bridge
