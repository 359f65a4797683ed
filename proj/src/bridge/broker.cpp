#include "sprite/bridge/broker.hpp"

#include <algorithm>

namespace sprite::bridge {

std::optional<std::string> Subscription::try_pop() {
  std::lock_guard lock(mu_);
  if (box_.empty()) return std::nullopt;
  std::string m = std::move(box_.front());
  box_.pop_front();
  return m;
}

std::optional<std::string> Subscription::pop_for(std::chrono::milliseconds timeout) {
  std::unique_lock lock(mu_);
  cv_.wait_for(lock, timeout, [&] { return !box_.empty() || closed_; });
  if (box_.empty()) return std::nullopt;
  std::string m = std::move(box_.front());
  box_.pop_front();
  return m;
}

void Subscription::set_notify(std::function<void()> fn) {
  std::lock_guard lock(mu_);
  notify_ = std::move(fn);
}

bool Subscription::closed() const {
  std::lock_guard lock(mu_);
  return closed_;
}

bool Subscription::overflowed() const {
  std::lock_guard lock(mu_);
  return overflowed_;
}

std::size_t Subscription::pending() const {
  std::lock_guard lock(mu_);
  return box_.size();
}

bool Subscription::push(std::string msg) {
  std::function<void()> notify;
  {
    std::lock_guard lock(mu_);
    if (closed_) return false;
    if (box_.size() >= kMailbox) return false;
    box_.push_back(std::move(msg));
    notify = notify_;
  }
  cv_.notify_all();
  if (notify) notify();
  return true;
}

void Subscription::close(bool overflow) {
  std::function<void()> notify;
  {
    std::lock_guard lock(mu_);
    if (closed_) return;
    closed_ = true;
    overflowed_ = overflow;
    notify = notify_;
  }
  cv_.notify_all();
  if (notify) notify();
}

Broker::Channel& Broker::channel(const std::string& robot) {
  std::lock_guard lock(mu_);
  auto& ch = channels_[robot];
  if (!ch) ch = std::make_unique<Channel>();
  return *ch;
}

const Broker::Channel* Broker::find(const std::string& robot) const {
  std::lock_guard lock(mu_);
  auto it = channels_.find(robot);
  return it == channels_.end() ? nullptr : it->second.get();
}

std::shared_ptr<Subscription> Broker::subscribe(const std::string& robot) {
  if (!is_valid_robot_id(robot)) throw FaceMessageError("bad robot id '" + robot + "'");
  Channel& ch = channel(robot);
  auto sub = std::make_shared<Subscription>(robot);
  std::lock_guard lock(ch.mu);
  // Replayed state carries the last issued seq; it does not take a new one.
  if (ch.config) sub->push(envelope({robot, *ch.config}, ch.seq, true).dump());
  if (!ch.units.empty()) sub->push(envelope({robot, ActionUnitsMsg{units_of(ch), true}}, ch.seq, true).dump());
  ch.subs.push_back(sub);
  return sub;
}

void Broker::unsubscribe(const std::shared_ptr<Subscription>& sub) {
  if (!sub) return;
  Channel& ch = channel(sub->robot());
  {
    std::lock_guard lock(ch.mu);
    std::erase(ch.subs, sub);
  }
  sub->close(false);
}

void Broker::apply(Channel& ch, const ActionUnitsMsg& m) {
  if (m.replace) ch.units.clear();
  for (const auto& u : m.units) {
    if (u.intensity == 0.0) {
      ch.units.erase({u.id, u.side});
    } else {
      ch.units[{u.id, u.side}] = u.intensity;
    }
  }
}

std::vector<face::ActionUnit> Broker::units_of(const Channel& ch) {
  std::vector<face::ActionUnit> out;
  for (const auto& [k, v] : ch.units) out.push_back({k.first, k.second, v});
  return out;
}

Delivery Broker::publish(const FaceCommand& cmd) {
  validate(cmd);
  Channel& ch = channel(cmd.robot);
  std::size_t dropped = 0;
  Delivery d;
  {
    std::lock_guard lock(ch.mu);
    d.seq = ++ch.seq;
    if (const auto* c = std::get_if<FaceConfig>(&cmd.payload)) ch.config = *c;
    if (const auto* au = std::get_if<ActionUnitsMsg>(&cmd.payload)) apply(ch, *au);
    const std::string text = envelope(cmd, d.seq).dump();
    for (auto it = ch.subs.begin(); it != ch.subs.end();) {
      if ((*it)->push(text)) {
        ++d.delivered;
        ++it;
      } else {
        // Too slow or already gone; never let one client hold up the rest.
        (*it)->close(!(*it)->closed());
        it = ch.subs.erase(it);
        ++dropped;
      }
    }
  }
  if (dropped) {
    std::lock_guard lock(mu_);
    dropped_ += dropped;
  }
  return d;
}

std::uint64_t Broker::last_seq(const std::string& robot) const {
  const Channel* ch = find(robot);
  if (!ch) return 0;
  std::lock_guard lock(ch->mu);
  return ch->seq;
}

std::size_t Broker::subscriber_count(const std::string& robot) const {
  const Channel* ch = find(robot);
  if (!ch) return 0;
  std::lock_guard lock(ch->mu);
  return ch->subs.size();
}

std::size_t Broker::dropped_clients() const {
  std::lock_guard lock(mu_);
  return dropped_;
}

std::vector<face::ActionUnit> Broker::action_unit_state(const std::string& robot) const {
  const Channel* ch = find(robot);
  if (!ch) return {};
  std::lock_guard lock(ch->mu);
  return units_of(*ch);
}

std::optional<FaceConfig> Broker::face_config(const std::string& robot) const {
  const Channel* ch = find(robot);
  if (!ch) return std::nullopt;
  std::lock_guard lock(ch->mu);
  return ch->config;
}

}  // namespace sprite::bridge
