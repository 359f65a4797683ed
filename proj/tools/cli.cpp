#include "cli.hpp"

#include <csignal>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <pthread.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "sprite/animation/library.hpp"
#include "sprite/bridge/engine.hpp"
#include "sprite/bridge/ws_server.hpp"
#include "sprite/dialogue/error.hpp"
#include "sprite/kinematics/workspace.hpp"

#ifndef SPRITE_DATA_DIR
#define SPRITE_DATA_DIR "."
#endif

namespace sprite::cli {

namespace {

namespace fs = std::filesystem;
using bridge::BridgeConfig;
using bridge::Engine;

struct Options {
  std::string config;
  std::string root = SPRITE_DATA_DIR;
  std::string cache;
  std::string tts;
  std::string library;
  std::string robot = "sprite";
  bool instant = false;
  bool verbose = false;
};

BridgeConfig make_config(const Options& o) {
  BridgeConfig c = bridge::default_config(o.root);
  if (!o.config.empty()) c = bridge::load_config(o.config, c);
  bridge::apply_env(c);
  // Flags beat the environment, which beats the file.
  if (!o.cache.empty()) c.cacheDir = o.cache;
  if (!o.tts.empty()) c.ttsEndpoint = o.tts;
  if (!o.library.empty()) c.library = o.library;
  return c;
}

std::unique_ptr<Engine> make_engine(const Options& o, BridgeConfig cfg) {
  std::shared_ptr<Clock> clock;
  if (o.instant) clock = std::make_shared<VirtualClock>();
  return std::make_unique<Engine>(bridge::EngineOptions{std::move(cfg), clock, nullptr});
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

int report_run(const dialogue::ExecutionReport& rep, Engine& engine, const std::string& robot, bool verbose,
               std::ostream& out) {
  std::size_t poses = 0;
  for (const auto& r : rep.log) {
    if (r.kind == dialogue::DispatchKind::BodyPose) {
      ++poses;
      if (!verbose) continue;
    }
    out << fixed(to_seconds(r.scheduled)) << "  " << r.what << "\n";
  }
  out << "status: " << dialogue::to_string(rep.status);
  if (!rep.failedSink.empty()) out << " (" << rep.failedSink << ")";
  out << "\n";
  out << "body_frames: " << poses << "\n";
  out << "controller_frames: " << engine.controller(robot).frames_received() << "\n";
  out << "max_deviation_ms: " << fixed(to_seconds(rep.max_deviation()) * 1e3) << "\n";
  out << "tts_calls: " << engine.tts().calls() << "\n";
  return rep.status == dialogue::RunStatus::Completed ? 0 : 1;
}

// Blocks SIGINT/SIGTERM in this and future threads so serve can wait for them.
sigset_t block_stop_signals() {
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &set, nullptr);
  return set;
}

int wait_for_stop(const sigset_t& set, double seconds) {
  if (seconds > 0.0) {
    timespec ts{};
    ts.tv_sec = static_cast<time_t>(seconds);
    ts.tv_nsec = static_cast<long>((seconds - static_cast<double>(ts.tv_sec)) * 1e9);
    const int sig = sigtimedwait(&set, nullptr, &ts);
    return sig < 0 ? 0 : sig;
  }
  int sig = 0;
  sigwait(&set, &sig);
  return sig;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sprite: speech, animation and body control for a Stewart-platform robot"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "bridge config JSON")->check(CLI::ExistingFile);
  app.add_option("--root", o.root, "data directory with config/, clips/, dialogue/");
  app.add_option("--cache", o.cache, "speech cache directory (overrides SPRITE_CACHE_DIR)");
  app.add_option("--tts", o.tts, "TTS server URL (overrides SPRITE_TTS_ENDPOINT); default offline stub");
  app.add_option("--library", o.library, "dialogue library used to resolve keys")->check(CLI::ExistingFile);
  app.add_option("--robot", o.robot, "robot id");
  app.add_flag("--instant", o.instant, "simulated clock: run without waiting in real time");
  app.add_flag("-v,--verbose", o.verbose, "print every body frame");

  std::string text;
  auto* say = app.add_subcommand("say", "speak dialogue text or a library key");
  say->add_option("text", text, "dialogue, e.g. \"<anim:nod> Hello world!\"")->required();

  std::string clip;
  auto* anim = app.add_subcommand("anim", "animation clips");
  anim->require_subcommand(1);
  auto* play = anim->add_subcommand("play", "play a clip by name");
  play->add_option("name", clip)->required();

  std::vector<double> pose;
  bool radians = false;
  auto* posecmd = app.add_subcommand("pose", "validate a pose and command it");
  posecmd->add_option("values", pose, "x y z (m) roll pitch yaw (deg)")->expected(6)->required();
  posecmd->add_flag("--radians", radians, "angles in radians");
  posecmd->allow_extras(false);
  posecmd->positionals_at_end(false);
  // Negative numbers are values here, not flags.
  app.allow_extras(false);

  double step_mm = 2.0, step_deg = 1.0;
  bool serial = false, as_json = false;
  std::string csv;
  auto* ws = app.add_subcommand("workspace", "sample and report the reachable workspace");
  ws->add_option("--step-mm", step_mm, "translation grid step")->check(CLI::PositiveNumber);
  ws->add_option("--step-deg", step_deg, "angle grid step")->check(CLI::PositiveNumber);
  ws->add_flag("--serial", serial, "single-threaded reference kernel");
  ws->add_flag("--json", as_json, "JSON summary");
  ws->add_option("--csv", csv, "write reachable samples to this file");

  std::vector<std::string> clips;
  auto* lint = app.add_subcommand("lint", "check clip files against the geometry");
  lint->add_option("clips", clips)->required()->check(CLI::ExistingFile);

  std::string library;
  auto* prefetch = app.add_subcommand("prefetch", "synthesize a dialogue library into the cache");
  prefetch->add_option("library", library)->required()->check(CLI::ExistingFile);

  std::string bind;
  int port = -1;
  double duration = 0.0;
  auto* serve = app.add_subcommand("serve", "run the WebSocket bridge until interrupted");
  serve->add_option("--bind", bind, "bind address");
  serve->add_option("--port", port, "port, 0 for any free one")->check(CLI::Range(0, 65535));
  serve->add_option("--for", duration, "stop after this many seconds");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  }

  try {
    if (*lint) {
      const auto geom = kinematics::load_geometry(make_config(o).geometry);
      int status = 0;
      for (const auto& path : clips) {
        animation::AnimationClip c;
        try {
          c = animation::load_clip(path);
        } catch (const std::exception& e) {
          err << "error: " << e.what() << "\n";
          status = 2;
          continue;
        }
        const auto r = animation::lint_clip(c, geom);
        out << path << ": " << r.framesChecked << " frames, " << r.issues.size() << " issues\n";
        for (const auto& i : r.issues) out << "  t=" << fixed(i.t) << " " << i.message << "\n";
        if (!r.ok() && status == 0) status = 1;
      }
      return status;
    }

    if (*ws) {
      const auto geom = kinematics::load_geometry(make_config(o).geometry);
      const auto rep = kinematics::sample_workspace(
          geom, {step_mm * 1e-3, kinematics::deg2rad(step_deg)}, {},
          serial ? kinematics::Execution::Serial : kinematics::Execution::Parallel);
      if (!csv.empty()) {
        std::ofstream f(csv);
        if (!f) throw std::runtime_error("cannot write " + csv);
        kinematics::write_csv(rep, f);
      }
      if (as_json) {
        out << kinematics::to_json(rep).dump(2) << "\n";
        return 0;
      }
      const char* axes[] = {"x", "y", "z"};
      const char* rots[] = {"roll", "pitch", "yaw"};
      out << "geometry: " << rep.geometryName << "\n";
      for (int i = 0; i < 3; ++i) {
        out << axes[i] << ": -" << fixed(rep.translationExtent[i].negative * 100, 1) << " / +"
            << fixed(rep.translationExtent[i].positive * 100, 1) << " cm\n";
      }
      for (int i = 0; i < 3; ++i) {
        out << rots[i] << ": -" << fixed(kinematics::rad2deg(rep.rotationExtent[i].negative), 1) << " / +"
            << fixed(kinematics::rad2deg(rep.rotationExtent[i].positive), 1) << " deg\n";
      }
      out << "tilt in every direction: " << fixed(kinematics::rad2deg(rep.maxTiltFromVertical), 1) << " deg\n";
      out << "samples: " << rep.samplesTested << ", reachable: " << rep.reachable.size() << "\n";
      return 0;
    }

    BridgeConfig cfg = make_config(o);

    if (*prefetch) {
      auto engine = make_engine(o, cfg);
      const auto lib = dialogue::DialogueLibrary::load(library);
      const std::size_t added = engine->prefetch(lib);
      out << "entries: " << lib.size() << "\n";
      out << "synthesized: " << added << "\n";
      out << "cache_entries: " << engine->cache().entry_count() << "\n";
      out << "cache_dir: " << engine->cache().dir().string() << "\n";
      return 0;
    }

    if (*say) {
      auto engine = make_engine(o, cfg);
      auto run = engine->say(o.robot, text);
      return report_run(run.get(), *engine, o.robot, o.verbose, out);
    }

    if (*play) {
      auto engine = make_engine(o, cfg);
      if (!engine->clips().find(clip)) {
        err << "error: unknown clip '" << clip << "'\n";
        return 2;
      }
      return report_run(engine->play(o.robot, clip).get(), *engine, o.robot, o.verbose, out);
    }

    if (*posecmd) {
      auto engine = make_engine(o, cfg);
      kinematics::Pose6 p{pose[0], pose[1], pose[2], pose[3], pose[4], pose[5]};
      if (!radians) {
        p.roll = kinematics::deg2rad(p.roll);
        p.pitch = kinematics::deg2rad(p.pitch);
        p.yaw = kinematics::deg2rad(p.yaw);
      }
      auto outcome = engine->pose(o.robot, p);
      if (!outcome.validation.valid) {
        err << "error: pose rejected, " << outcome.validation.describe() << "\n";
        out << "controller_frames: " << engine->controller(o.robot).frames_received() << "\n";
        return 1;
      }
      const auto rep = outcome.run.get();
      out << "angles_deg:";
      for (double a : outcome.validation.angles.alpha) out << " " << fixed(kinematics::rad2deg(a), 2);
      out << "\n";
      out << "ticks:";
      for (int t : engine->controller(o.robot).snapshot().commandedTicks) out << " " << t;
      out << "\n";
      out << "controller_frames: " << engine->controller(o.robot).frames_received() << "\n";
      return rep.status == dialogue::RunStatus::Completed ? 0 : 1;
    }

    if (*serve) {
      if (!bind.empty()) cfg.bindAddress = bind;
      if (port >= 0) cfg.port = static_cast<unsigned short>(port);
      const sigset_t signals = block_stop_signals();
      Engine engine({cfg, nullptr, nullptr});
      bridge::WsServer server(engine.broker(), cfg.bindAddress, cfg.port);
      server.start();
      for (const auto& r : cfg.robots) {
        out << "listening on ws://" << cfg.bindAddress << ":" << server.port() << "/robot/" << r << "\n";
      }
      out << std::flush;
      wait_for_stop(signals, duration);
      server.stop();
      out << "stopped\n";
      return 0;
    }
  } catch (const dialogue::DialogueError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace sprite::cli
