#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <set>
#include <stop_token>

namespace sprite {

using Nanos = std::int64_t;

inline Nanos to_nanos(double seconds) { return static_cast<Nanos>(std::llround(seconds * 1e9)); }
inline double to_seconds(Nanos ns) { return static_cast<double>(ns) * 1e-9; }

class Clock {
 public:
  virtual ~Clock() = default;
  virtual Nanos now() const = 0;
  // Returns false if `stop` was requested before the deadline.
  virtual bool sleep_until(Nanos deadline, std::stop_token stop) = 0;
};

// Wall time on the steady clock, zero at construction.
class SteadyClock : public Clock {
 public:
  SteadyClock();
  Nanos now() const override;
  bool sleep_until(Nanos deadline, std::stop_token stop) override;

 private:
  std::chrono::steady_clock::time_point origin_;
  std::mutex mu_;
  std::condition_variable_any cv_;
};

// Simulated time that jumps straight to every deadline.
class VirtualClock : public Clock {
 public:
  Nanos now() const override { return now_.load(); }
  bool sleep_until(Nanos deadline, std::stop_token stop) override;
  void advance(Nanos d) { now_ += d; }

 private:
  std::atomic<Nanos> now_{0};
};

// Test clock: sleepers block until the test moves time forward.
class ManualClock : public Clock {
 public:
  Nanos now() const override;
  bool sleep_until(Nanos deadline, std::stop_token stop) override;
  void advance(Nanos d);
  void set(Nanos t);
  // Blocks until at least n threads sleep on deadlines still in the future.
  void wait_for_sleepers(int n);

 private:
  mutable std::mutex mu_;
  std::condition_variable_any cv_;
  Nanos now_ = 0;
  std::multiset<Nanos> deadlines_;
};


inline SteadyClock::SteadyClock() : origin_(std::chrono::steady_clock::now()) {}

inline Nanos SteadyClock::now() const {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - origin_).count();
}

inline bool SteadyClock::sleep_until(Nanos deadline, std::stop_token stop) {
  const auto when = origin_ + std::chrono::nanoseconds(deadline);
  std::unique_lock lock(mu_);
  cv_.wait_until(lock, stop, when, [] { return false; });
  return !stop.stop_requested();
}

inline bool VirtualClock::sleep_until(Nanos deadline, std::stop_token stop) {
  if (stop.stop_requested()) return false;
  Nanos cur = now_.load();
  while (cur < deadline && !now_.compare_exchange_weak(cur, deadline)) {
  }
  return true;
}

inline Nanos ManualClock::now() const {
  std::lock_guard lock(mu_);
  return now_;
}

inline bool ManualClock::sleep_until(Nanos deadline, std::stop_token stop) {
  std::unique_lock lock(mu_);
  const auto it = deadlines_.insert(deadline);
  cv_.notify_all();
  const bool reached = cv_.wait(lock, stop, [&] { return now_ >= deadline; });
  deadlines_.erase(it);
  cv_.notify_all();
  return reached;
}

inline void ManualClock::advance(Nanos d) {
  std::lock_guard lock(mu_);
  now_ += d;
  cv_.notify_all();
}

inline void ManualClock::set(Nanos t) {
  std::lock_guard lock(mu_);
  now_ = t;
  cv_.notify_all();
}

inline void ManualClock::wait_for_sleepers(int n) {
  std::unique_lock lock(mu_);
  cv_.wait(lock, [&] {
    return static_cast<int>(deadlines_.size()) >= n && (deadlines_.empty() || *deadlines_.begin() > now_);
  });
}

}  // namespace sprite
