#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "sprite/dialogue/executor.hpp"

namespace sprite::testing {

// Face, body and audio sinks that log every call by name.
class RecordingSinks : public std::enable_shared_from_this<RecordingSinks> {
 public:
  dialogue::Sinks sinks() {
    auto self = shared_from_this();
    return {std::make_shared<Face>(self), std::make_shared<Body>(self), std::make_shared<Audio>(self)};
  }

  void disconnect_face_after(int calls) { face_budget_ = calls; }

  std::vector<std::string> log() const {
    std::lock_guard lock(mu_);
    return log_;
  }
  std::size_t count(const std::string& what) const {
    std::lock_guard lock(mu_);
    return static_cast<std::size_t>(std::count(log_.begin(), log_.end(), what));
  }
  std::vector<kinematics::Pose6> poses() const {
    std::lock_guard lock(mu_);
    return poses_;
  }
  face::Viseme last_viseme() const {
    std::lock_guard lock(mu_);
    return viseme_;
  }

 private:
  void note(const std::string& what) {
    std::lock_guard lock(mu_);
    log_.push_back(what);
  }
  void face_call(const std::string& what) {
    {
      std::lock_guard lock(mu_);
      if (face_budget_ == 0) throw dialogue::SinkDisconnected("face");
      if (face_budget_ > 0) --face_budget_;
    }
    note(what);
  }

  struct Face : dialogue::FaceSink {
    explicit Face(std::shared_ptr<RecordingSinks> o) : owner(std::move(o)) {}
    void viseme(face::Viseme v) override {
      owner->face_call("viseme");
      std::lock_guard lock(owner->mu_);
      owner->viseme_ = v;
    }
    void action_units(const std::vector<face::ActionUnit>&, bool replace) override {
      owner->face_call(replace ? "expression" : "face_units");
    }
    void gaze(const dialogue::Point3&) override { owner->face_call("gaze"); }
    void look_reset() override { owner->face_call("look_reset"); }
    void neutral() override { owner->face_call("neutral"); }
    std::shared_ptr<RecordingSinks> owner;
  };
  struct Body : dialogue::BodySink {
    explicit Body(std::shared_ptr<RecordingSinks> o) : owner(std::move(o)) {}
    void pose(const kinematics::Pose6& p) override {
      owner->note("pose");
      std::lock_guard lock(owner->mu_);
      owner->poses_.push_back(p);
    }
    void stop() override { owner->note("body_stop"); }
    std::shared_ptr<RecordingSinks> owner;
  };
  struct Audio : dialogue::AudioSink {
    explicit Audio(std::shared_ptr<RecordingSinks> o) : owner(std::move(o)) {}
    void start(const dialogue::SpeechTiming&) override { owner->note("audio_start"); }
    void stop() override { owner->note("audio_stop"); }
    std::shared_ptr<RecordingSinks> owner;
  };

  mutable std::mutex mu_;
  std::vector<std::string> log_;
  std::vector<kinematics::Pose6> poses_;
  face::Viseme viseme_ = face::Viseme::Sil;
  int face_budget_ = -1;
};

}  // namespace sprite::testing
