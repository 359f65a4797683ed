#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sprite/bridge/face_command.hpp"

namespace sprite::bridge {

class Broker;

// One client's view of a robot. Messages queue here until the client takes
// them; a client that falls kMailbox messages behind is dropped.
class Subscription {
 public:
  static constexpr std::size_t kMailbox = 4096;

  explicit Subscription(std::string robot) : robot_(std::move(robot)) {}

  std::optional<std::string> try_pop();
  std::optional<std::string> pop_for(std::chrono::milliseconds timeout);
  // Called after every push and on close, from the publishing thread.
  void set_notify(std::function<void()> fn);

  bool closed() const;
  bool overflowed() const;
  std::size_t pending() const;
  const std::string& robot() const { return robot_; }

 private:
  friend class Broker;
  // False once the mailbox is full.
  bool push(std::string msg);
  void close(bool overflow);

  std::string robot_;
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::deque<std::string> box_;
  bool closed_ = false;
  bool overflowed_ = false;
  std::function<void()> notify_;
};

struct Delivery {
  std::uint64_t seq = 0;
  std::size_t delivered = 0;
  bool noSubscribers() const { return delivered == 0; }
};

// Per-robot sequencer and fan-out.
class Broker {
 public:
  // Replays the current face config and action-unit state, if any.
  std::shared_ptr<Subscription> subscribe(const std::string& robot);
  void unsubscribe(const std::shared_ptr<Subscription>& sub);

  // Throws FaceMessageError for invalid commands; nothing is sequenced then.
  Delivery publish(const FaceCommand& cmd);

  std::uint64_t last_seq(const std::string& robot) const;
  std::size_t subscriber_count(const std::string& robot) const;
  std::size_t dropped_clients() const;
  std::vector<face::ActionUnit> action_unit_state(const std::string& robot) const;
  std::optional<FaceConfig> face_config(const std::string& robot) const;

 private:
  struct Channel {
    mutable std::mutex mu;
    std::uint64_t seq = 0;
    std::vector<std::shared_ptr<Subscription>> subs;
    std::optional<FaceConfig> config;
    std::map<std::pair<int, face::Side>, double> units;
  };

  Channel& channel(const std::string& robot);
  const Channel* find(const std::string& robot) const;
  static void apply(Channel& ch, const ActionUnitsMsg& m);
  static std::vector<face::ActionUnit> units_of(const Channel& ch);

  mutable std::mutex mu_;
  std::map<std::string, std::unique_ptr<Channel>> channels_;
  std::size_t dropped_ = 0;
};

}  // namespace sprite::bridge
