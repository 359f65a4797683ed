#pragma once

#include <condition_variable>
#include <deque>
#include <future>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <thread>
#include <vector>

#include "sprite/dialogue/clock.hpp"
#include "sprite/dialogue/schedule.hpp"

namespace sprite::dialogue {

// Thrown by a sink whose consumer has gone away.
class SinkDisconnected : public std::runtime_error {
 public:
  explicit SinkDisconnected(const std::string& sink) : std::runtime_error("sink disconnected: " + sink), sink_(sink) {}
  const std::string& sink() const { return sink_; }

 private:
  std::string sink_;
};

// Sinks are called from the executor's worker thread.
class FaceSink {
 public:
  virtual ~FaceSink() = default;
  virtual void viseme(face::Viseme v) = 0;
  // replace = true clears units not listed (expressions); false overlays.
  virtual void action_units(const std::vector<face::ActionUnit>& units, bool replace) = 0;
  virtual void gaze(const Point3& target) = 0;
  virtual void look_reset() = 0;
  virtual void neutral() = 0;
};

class BodySink {
 public:
  virtual ~BodySink() = default;
  virtual void pose(const kinematics::Pose6& p) = 0;
  virtual void stop() = 0;
};

class AudioSink {
 public:
  virtual ~AudioSink() = default;
  virtual void start(const SpeechTiming& speech) = 0;
  virtual void stop() = 0;
};

struct Sinks {
  std::shared_ptr<FaceSink> face;
  std::shared_ptr<BodySink> body;
  std::shared_ptr<AudioSink> audio;
};

struct DispatchRecord {
  DispatchKind kind = DispatchKind::AudioStart;
  std::string what;
  Nanos scheduled = 0;  // relative to the run start
  Nanos actual = 0;

  bool operator==(const DispatchRecord&) const = default;
};

// SinkFailed: a sink threw anything other than SinkDisconnected; failedSink
// then holds the message.
enum class RunStatus { Completed, Preempted, SinkDisconnected, SinkFailed };

std::string_view to_string(RunStatus s);

struct ExecutionReport {
  std::string robot;
  std::string label;
  RunStatus status = RunStatus::Completed;
  std::string failedSink;
  Nanos startedAt = 0;
  std::vector<DispatchRecord> log;

  Nanos max_deviation() const;
};

// One per robot. Plans run one at a time on a worker thread; submitting a new
// plan preempts the running one (animation and audio stop, face goes neutral)
// and supersedes any plan still waiting.
class Executor {
 public:
  static constexpr Nanos kTick = 10'000'000;

  Executor(std::string robot, Sinks sinks, std::shared_ptr<Clock> clock);
  ~Executor();
  Executor(const Executor&) = delete;
  Executor& operator=(const Executor&) = delete;

  std::future<ExecutionReport> submit(Plan plan);
  // Stops whatever is running; the face returns to neutral.
  void preempt();
  const std::string& robot() const { return robot_; }
  Clock& clock() { return *clock_; }

 private:
  struct Job {
    Plan plan;
    std::promise<ExecutionReport> done;
  };

  void worker(std::stop_token stop);
  ExecutionReport run(const Plan& plan, std::stop_token stop);
  void dispatch(const DispatchEvent& e);
  void settle_after_preempt();

  std::string robot_;
  Sinks sinks_;
  std::shared_ptr<Clock> clock_;

  std::mutex mu_;
  std::condition_variable_any cv_;
  std::deque<Job> queue_;
  std::stop_source current_;
  bool running_ = false;
  std::jthread thread_;
};

}  // namespace sprite::dialogue
