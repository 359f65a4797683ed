#include "sprite/dialogue/executor.hpp"

#include <algorithm>

namespace sprite::dialogue {

std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Completed: return "completed";
    case RunStatus::Preempted: return "preempted";
    case RunStatus::SinkDisconnected: return "sink_disconnected";
    case RunStatus::SinkFailed: return "sink_failed";
  }
  return "?";
}

Nanos ExecutionReport::max_deviation() const {
  Nanos worst = 0;
  for (const auto& r : log) worst = std::max(worst, r.actual > r.scheduled ? r.actual - r.scheduled : r.scheduled - r.actual);
  return worst;
}

Executor::Executor(std::string robot, Sinks sinks, std::shared_ptr<Clock> clock)
    : robot_(std::move(robot)), sinks_(std::move(sinks)), clock_(std::move(clock)) {
  thread_ = std::jthread([this](std::stop_token st) { worker(st); });
}

Executor::~Executor() {
  {
    std::lock_guard lock(mu_);
    current_.request_stop();
  }
  thread_.request_stop();
  if (thread_.joinable()) thread_.join();
  for (Job& j : queue_) j.done.set_value({robot_, j.plan.label, RunStatus::Preempted, {}, 0, {}});
}

std::future<ExecutionReport> Executor::submit(Plan plan) {
  std::lock_guard lock(mu_);
  for (Job& j : queue_) j.done.set_value({robot_, j.plan.label, RunStatus::Preempted, {}, clock_->now(), {}});
  queue_.clear();
  current_.request_stop();
  Job job{std::move(plan), {}};
  auto fut = job.done.get_future();
  queue_.push_back(std::move(job));
  cv_.notify_all();
  return fut;
}

void Executor::preempt() {
  std::lock_guard lock(mu_);
  for (Job& j : queue_) j.done.set_value({robot_, j.plan.label, RunStatus::Preempted, {}, clock_->now(), {}});
  queue_.clear();
  current_.request_stop();
  if (!running_) settle_after_preempt();
}

void Executor::worker(std::stop_token stop) {
  for (;;) {
    Job job;
    std::stop_token token;
    {
      std::unique_lock lock(mu_);
      if (!cv_.wait(lock, stop, [&] { return !queue_.empty(); })) return;
      job = std::move(queue_.front());
      queue_.pop_front();
      current_ = std::stop_source();
      token = current_.get_token();
      running_ = true;
    }
    ExecutionReport report = run(job.plan, token);
    {
      std::lock_guard lock(mu_);
      running_ = false;
    }
    job.done.set_value(std::move(report));
  }
}

ExecutionReport Executor::run(const Plan& plan, std::stop_token stop) {
  ExecutionReport report;
  report.robot = robot_;
  report.label = plan.label;
  report.startedAt = clock_->now();
  const Nanos start = report.startedAt;
  auto preempted = [&] {
    settle_after_preempt();
    report.status = RunStatus::Preempted;
    return report;
  };

  for (const DispatchEvent& e : plan.events) {
    const Nanos scheduled = to_nanos(e.t);
    if (!clock_->sleep_until(start + scheduled, stop) || stop.stop_requested()) return preempted();
    try {
      dispatch(e);
    } catch (const SinkDisconnected& s) {
      report.status = RunStatus::SinkDisconnected;
      report.failedSink = s.sink();
      return report;
    } catch (const std::exception& ex) {
      report.status = RunStatus::SinkFailed;
      report.failedSink = ex.what();
      return report;
    }
    report.log.push_back({e.kind, e.describe(), scheduled, clock_->now() - start});
  }
  // Audio and the last animation frame may still be playing out.
  if (!clock_->sleep_until(start + to_nanos(plan.duration), stop) || stop.stop_requested()) return preempted();
  return report;
}

void Executor::dispatch(const DispatchEvent& e) {
  switch (e.kind) {
    case DispatchKind::AudioStart:
      if (sinks_.audio && e.speech) sinks_.audio->start(*e.speech);
      break;
    case DispatchKind::Viseme:
      if (sinks_.face) sinks_.face->viseme(e.viseme);
      break;
    case DispatchKind::Expression:
      if (sinks_.face) sinks_.face->action_units(e.units, true);
      break;
    case DispatchKind::FaceUnits:
      if (sinks_.face) sinks_.face->action_units(e.units, false);
      break;
    case DispatchKind::Gaze:
      if (sinks_.face) sinks_.face->gaze(e.point);
      break;
    case DispatchKind::LookReset:
      if (sinks_.face) sinks_.face->look_reset();
      break;
    case DispatchKind::BodyPose:
      if (sinks_.body) sinks_.body->pose(e.pose);
      break;
    case DispatchKind::AnimationStart: break;
  }
}

void Executor::settle_after_preempt() {
  auto quietly = [](auto&& f) {
    try {
      f();
    } catch (const std::exception&) {
    }
  };
  if (sinks_.body) quietly([&] { sinks_.body->stop(); });
  if (sinks_.audio) quietly([&] { sinks_.audio->stop(); });
  if (sinks_.face) quietly([&] { sinks_.face->neutral(); });
}

}  // namespace sprite::dialogue
