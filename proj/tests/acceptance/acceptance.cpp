// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>

#include "json.hpp"
#include "oracles.hpp"
#include "sprite/animation/bezier.hpp"
#include "sprite/animation/clip.hpp"
#include "sprite/animation/player.hpp"
#include "sprite/bridge/engine.hpp"
#include "sprite/bridge/ws_server.hpp"
#include "sprite/controller/body.hpp"
#include "sprite/dialogue/error.hpp"
#include "sprite/kinematics/forward.hpp"
#include "sprite/kinematics/inverse.hpp"
#include "sprite/kinematics/validate.hpp"
#include "sprite/kinematics/workspace.hpp"
#include "temp_dir.hpp"
#include "ws_client.hpp"

using namespace sprite;
using namespace sprite::kinematics;
using nlohmann::json;

namespace {

const std::string kRoot = SPRITE_SOURCE_DIR;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<Pose6> reachable(const PlatformGeometry& g, std::size_t n, std::uint32_t seed, double trans, double ang) {
  std::vector<Pose6> out;
  for (const Pose6& p : testing::random_poses(50 * n, seed, trans, ang)) {
    if (validate_pose(p, g).valid) out.push_back(p);
    if (out.size() == n) break;
  }
  return out;
}

bridge::BridgeConfig base_config(const std::filesystem::path& cache) {
  bridge::BridgeConfig c = bridge::default_config(kRoot);
  c.cacheDir = cache;
  return c;
}

Outcome workspace_poses() {
  const auto g = sprite_default_geometry();
  const auto t0 = Clock::now();
  const double a = deg2rad(30.0);
  const Pose6 poses[] = {{0, 0, 0.04, 0, 0, 0}, {0, 0, -0.04, 0, 0, 0}, {0, 0, 0, 0, a, 0},
                         {0, 0, 0, 0, -a, 0},   {0, 0, 0, a, 0, 0},      {0, 0, 0, -a, 0, 0}};
  int ok = 0;
  for (const Pose6& p : poses) ok += validate_pose(p, g).valid;
  const double dt = seconds_since(t0);
  return {ok == 6 && dt < 1.0, fmt("%d/6 poses valid, %.4f s (limit 1 s)", ok, dt)};
}

Outcome workspace_extent() {
  const auto g = sprite_default_geometry();
  const auto t0 = Clock::now();
  const WorkspaceReport r = sample_workspace(g, {0.002, deg2rad(1.0)});
  const double dt = seconds_since(t0);
  bool band = true;
  for (double m : r.maxTranslation) band = band && m >= 0.04 && m <= 0.06;
  const double tilt = rad2deg(r.maxTiltFromVertical);
  return {band && tilt >= 40.0 && dt < 30.0,
          fmt("x %.1f y %.1f z %.1f cm (band 4-6), tilt %.1f deg (>= 40), %.2f s (limit 30 s)",
              r.maxTranslation[0] * 100, r.maxTranslation[1] * 100, r.maxTranslation[2] * 100, tilt, dt)};
}

Outcome ik_oracle() {
  const auto g = sprite_default_geometry();
  const auto t0 = Clock::now();
  const auto poses = reachable(g, 1000, 11, 0.05, deg2rad(35.0));
  double worst = 0.0;
  bool all = poses.size() == 1000;
  for (const Pose6& p : poses) {
    const ServoAngles a = inverse_kinematics(p, g);
    for (std::size_t i = 0; i < kLegs; ++i) {
      const auto ref = testing::bisect_leg_angle(g, i, p);
      if (!ref) {
        all = false;
        continue;
      }
      worst = std::max(worst, std::abs(a.alpha[i] - *ref));
    }
  }
  const double dt = seconds_since(t0);
  return {all && worst <= 1e-9 && dt < 10.0,
          fmt("%zu poses, max |closed form - bisection| %.2e rad (limit 1e-9), %.2f s (limit 10 s)", poses.size(), worst,
              dt)};
}

Outcome fk_round_trip() {
  const auto g = sprite_default_geometry();
  const auto poses = reachable(g, 1000, 99, testing::kRoundTripTranslation, testing::kRoundTripAngle);
  double worst_t = 0.0, worst_r = 0.0;
  int worst_it = 0;
  bool all = poses.size() == 1000;
  for (const Pose6& p : poses) {
    try {
      const FkResult r = solve_fk(inverse_kinematics(p, g), g);
      const auto d = to_array(r.pose), e = to_array(p);
      for (int k = 0; k < 3; ++k) worst_t = std::max(worst_t, std::abs(d[k] - e[k]));
      for (int k = 3; k < 6; ++k) worst_r = std::max(worst_r, std::abs(d[k] - e[k]));
      worst_it = std::max(worst_it, r.iterations);
    } catch (const std::exception&) {
      all = false;
    }
  }
  return {all && worst_t <= 1e-6 && worst_r <= 1e-6 && worst_it <= 20,
          fmt("%zu poses from home guess, max error %.1e m / %.1e rad (limit 1e-6), max %d iterations (limit 20)",
              poses.size(), worst_t, worst_r, worst_it)};
}

Outcome bezier_oracle() {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> start(0.0, 5.0), span(0.05, 2.0), val(-1.0, 1.0), frac(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double t0 = start(rng), s = span(rng), v0 = val(rng), v1 = val(rng);
    const animation::CubicSegment seg{{t0, t0 + frac(rng) * s, t0 + s - frac(rng) * s, t0 + s},
                                      {v0, v0 + val(rng), v1 + val(rng), v1}};
    const double t = std::uniform_real_distribution<double>(t0, t0 + s)(rng);
    const std::array<std::array<double, 2>, 4> pts{{{seg.time[0], seg.value[0]},
                                                    {seg.time[1], seg.value[1]},
                                                    {seg.time[2], seg.value[2]},
                                                    {seg.time[3], seg.value[3]}}};
    worst = std::max(worst, std::abs(seg.sample(t) - testing::bezier_value_oracle(pts, t)));
  }
  // Keyframe times on random multi-key tracks with default handles.
  std::size_t keys = 0, exact = 0;
  for (int c = 0; c < 200; ++c) {
    std::vector<animation::Keyframe> kf;
    double t = 0.0;
    const int n = 2 + c % 6;
    for (int k = 0; k < n; ++k) {
      kf.push_back({t, 0.02 * val(rng)});
      t += span(rng);
    }
    const animation::AnimationClip clip("k", {{"z", kf}});
    for (const auto& k : kf) {
      ++keys;
      exact += clip.sample("z", k.t) == k.v;
    }
  }
  return {worst <= 1e-12 && exact == keys,
          fmt("10000 (segment, t) pairs, max |sampler - de Casteljau| %.1e (limit 1e-12); %zu/%zu keyframe samples exact",
              worst, exact, keys)};
}

Outcome two_level_limits() {
  using namespace sprite::controller;
  auto clock = std::make_shared<ManualClock>();
  ControllerSim sim({}, clock);
  const auto calib = ServoCalibration::standard();
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> kind(0, 9), tick(-4000, 4000), dt(0, 15);
  std::size_t out_of_range = 0;
  for (int i = 0; i < 10000; ++i) {
    Command c;
    switch (kind(rng)) {
      case 0: c = EstopCmd{true}; break;
      case 1: c = EstopCmd{false}; break;
      case 2: c = EnableCmd{}; break;
      case 3: c = DisableCmd{}; break;
      default: {
        Ticks t;
        for (int& v : t) v = tick(rng);
        c = MoveCmd{t, {}};
      }
    }
    sim.handle_line(encode_frame(c));
    clock->advance(static_cast<Nanos>(dt(rng)) * 1'000'000);
    for (double a : sim.snapshot().actualTicks) out_of_range += a < calib.minTick || a > calib.maxTick;
  }

  ControllerSim sim2({}, clock);
  LoopbackTransport link(sim2);
  const auto g = sprite_default_geometry();
  BodyController body(g, calib, link);
  std::size_t rejected = 0, leaked = 0, accepted = 0;
  for (const Pose6& p : testing::random_poses(5000, 8, 0.08, deg2rad(60.0))) {
    const std::size_t before = sim2.frames_received();
    const bool valid = validate_pose(p, g).valid;
    body.send_pose(p);
    const std::size_t sent = sim2.frames_received() - before;
    if (valid) {
      ++accepted;
    } else {
      ++rejected;
      leaked += sent;
    }
  }
  return {out_of_range == 0 && leaked == 0 && rejected > 0,
          fmt("10000 fuzzed frames, %zu out-of-range tick samples; %zu rejected poses sent %zu frames (%zu accepted)",
              out_of_range, rejected, leaked, accepted)};
}

Outcome synchronization() {
  testing::TempDir dir;
  // Virtual clock: every dispatch lands exactly on schedule, and the schedule
  // agrees with word boundaries taken straight from the stub voice.
  auto vclock = std::make_shared<VirtualClock>();
  bridge::Engine virt({base_config(dir.path()), vclock, nullptr});
  const dialogue::SpeechTiming words = dialogue::StubTts{}.synthesize("Hello world", "default");
  const double world_start = words.words.at(1).start;

  bool exact = true, anchored = false, ends_sil = false;
  std::size_t visemes = 0;
  bool audio_first = false;
  for (const std::string line : {"Hello world!", "<expr:happy>Hello <anim:nod>world!"}) {
    const auto rep = virt.say("sprite", line).get();
    exact = exact && rep.status == dialogue::RunStatus::Completed;
    audio_first = !rep.log.empty() && rep.log.front().kind == dialogue::DispatchKind::AudioStart;
    for (const auto& r : rep.log) {
      exact = exact && r.actual == r.scheduled;
      if (r.kind == dialogue::DispatchKind::Viseme) {
        ++visemes;
        ends_sil = r.what == "viseme sil";
      }
      if (r.kind == dialogue::DispatchKind::AnimationStart && r.what == "animation_start nod") {
        anchored = r.scheduled == to_nanos(world_start);
      }
    }
  }

  // Real clock over the golden timeline set (every bundled library entry).
  bridge::Engine real({base_config(dir.path()), nullptr, nullptr});
  Nanos worst = 0;
  std::size_t events = 0;
  bool completed = true;
  for (const auto& key : real.library().keys()) {
    const auto rep = real.say("sprite", key).get();
    completed = completed && rep.status == dialogue::RunStatus::Completed;
    worst = std::max(worst, rep.max_deviation());
    events += rep.log.size();
  }
  const double worst_ms = to_seconds(worst) * 1e3;
  return {exact && anchored && ends_sil && audio_first && visemes > 0 && completed && worst_ms <= 10.0,
          fmt("virtual: %zu visemes, all deltas 0 = %s, nod at 'world' (%.2f s) = %s; real: %zu events over %zu "
              "entries, max deviation %.3f ms (limit 10)",
              visemes, exact ? "yes" : "no", world_start, anchored ? "yes" : "no", events, real.library().size(),
              worst_ms)};
}

// Fails every call: proof that nothing reaches a voice.
class NoVoice : public dialogue::TtsClient {
 public:
  dialogue::SpeechTiming synthesize(const std::string&, const std::string&) override {
    count_call();
    throw dialogue::DialogueError(dialogue::DialogueError::Kind::TtsUnavailable, "", "offline");
  }
  std::string describe() const override { return "none"; }
};

Outcome offline() {
  testing::TempDir dir;
  auto cfg = base_config(dir.path());
  cfg.library = kRoot + "/tests/fixtures/library3.json";
  std::size_t added = 0, entries = 0;
  {
    bridge::Engine online({cfg, std::make_shared<VirtualClock>(), nullptr});
    added = online.prefetch(online.library());
    entries = online.cache().entry_count();
  }
  auto none = std::make_shared<NoVoice>();
  bridge::Engine offline({cfg, std::make_shared<VirtualClock>(), none});
  std::size_t completed = 0;
  for (const auto& key : offline.library().keys()) {
    try {
      completed += offline.say("sprite", key).get().status == dialogue::RunStatus::Completed;
    } catch (const std::exception&) {
    }
  }
  return {added == 3 && entries == 3 && completed == 3 && none->calls() == 0,
          fmt("prefetch stored %zu entries; %zu/3 entries executed with %zu TTS calls", entries, completed,
              none->calls())};
}

Outcome multi_robot() {
  testing::TempDir dir;
  auto cfg = base_config(dir.path());
  cfg.robots = {"left", "right"};
  bridge::Engine engine({cfg, nullptr, nullptr});
  bridge::WsServer server(engine.broker());
  server.start();
  testing::WsClient left(server.port(), "/robot/left");
  testing::WsClient right(server.port(), "/robot/right");
  for (int i = 0; i < 400 && engine.broker().subscriber_count("left") + engine.broker().subscriber_count("right") < 2;
       ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }

  auto a = engine.say("left", "<anim:nod>Hello world! <expr:happy>");
  auto b = engine.say("right", "<anim:shake_head>No, I do not think so. <gaze:point(0.2, 0.1, 0.8)>");
  const bool done = a.get().status == dialogue::RunStatus::Completed &&
                    b.get().status == dialogue::RunStatus::Completed;

  auto collect = [](testing::WsClient& c, const std::string& robot, std::uint64_t expect, bool& fifo, bool& own) {
    std::uint64_t n = 0;
    while (n < expect) {
      const auto m = c.read(std::chrono::seconds(2));
      if (!m) break;
      const auto fm = bridge::parse_message(*m);
      own = own && fm.command.robot == robot;
      fifo = fifo && fm.seq == n + 1;
      ++n;
    }
    if (c.read(std::chrono::milliseconds(100))) own = false;
    return n;
  };
  bool fifo = true, own = true;
  const auto nl = collect(left, "left", engine.broker().last_seq("left"), fifo, own);
  const auto nr = collect(right, "right", engine.broker().last_seq("right"), fifo, own);
  const bool bodies = engine.controller("left").moves_received() > 0 && engine.controller("right").moves_received() > 0;
  return {done && fifo && own && bodies && nl == engine.broker().last_seq("left") &&
              nr == engine.broker().last_seq("right") && nl > 0 && nr > 0,
          fmt("concurrent runs over WebSocket: left %llu msgs, right %llu msgs, per-robot FIFO = %s, no crossing = %s",
              static_cast<unsigned long long>(nl), static_cast<unsigned long long>(nr), fifo ? "yes" : "no",
              own ? "yes" : "no")};
}

Outcome estop() {
  using namespace sprite::controller;
  auto clock = std::make_shared<ManualClock>();
  ControllerSim sim({}, clock);
  LoopbackTransport link(sim);
  BodyController body(sprite_default_geometry(), ServoCalibration::standard(), link);
  const auto clip = animation::load_clip(kRoot + "/clips/happy_dance.json");
  const auto frames = animation::play(clip, 50.0);
  const std::size_t mid = frames.size() / 2;

  ControllerState frozen;
  bool froze = true, acked = true, tracked = true, any_motion = false;
  ControllerState first = sim.snapshot();
  for (std::size_t k = 0; k < frames.size(); ++k) {
    clock->set(to_nanos(frames[k].t));
    if (k == mid) {
      const json r = json::parse(body.send(EstopCmd{true}));
      acked = acked && r["ok"] == true;
      frozen = sim.snapshot();
      any_motion = frozen.actualTicks != first.actualTicks;
      // One simulation step later nothing has moved.
      clock->set(to_nanos(frames[k].t) + ServoSim::kStep);
      froze = froze && sim.snapshot().actualTicks == frozen.actualTicks;
    }
    const auto pose = animation::body_pose(frames[k]);
    if (!pose) continue;
    const SendResult s = body.send_pose(*pose);
    acked = acked && s.sent && json::parse(s.response)["ok"] == true;
    if (k > mid) {
      const auto st = sim.snapshot();
      froze = froze && st.actualTicks == frozen.actualTicks;
      tracked = tracked && st.commandedTicks == s.ticks;
    }
  }
  return {froze && acked && tracked && any_motion,
          fmt("e-stop at t=%.2f s of %s: actual ticks frozen within %lld ms = %s, %zu later moves acknowledged = %s, "
              "commanded ticks kept updating = %s",
              frames[mid].t, clip.name().c_str(), static_cast<long long>(ServoSim::kStep / 1'000'000),
              froze ? "yes" : "no", frames.size() - mid - 1, acked ? "yes" : "no", tracked ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"workspace reproduction", workspace_poses},
      {"workspace extent", workspace_extent},
      {"IK oracle equivalence", ik_oracle},
      {"FK/IK round trip", fk_round_trip},
      {"Bezier oracle equivalence", bezier_oracle},
      {"two-level limits", two_level_limits},
      {"synchronization", synchronization},
      {"offline capability", offline},
      {"multi-robot isolation", multi_robot},
      {"e-stop", estop},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s  %-26s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures;
}
