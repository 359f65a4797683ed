#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "temp_dir.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result sprite_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = sprite::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

const std::string kRoot = SPRITE_SOURCE_DIR;

}  // namespace

TEST_CASE("say Hello world with the stub voice") {
  sprite::testing::TempDir dir;
  const Result r = sprite_cli({"--root", kRoot, "--cache", dir.path().string(), "--instant", "say", "Hello world!"});
  CAPTURE(r.err);
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE_FALSE(ls.empty());
  CHECK(has(ls.front(), "audio_start"));
  std::string last_viseme;
  std::size_t visemes = 0;
  for (const auto& l : ls) {
    if (has(l, "  viseme ")) {
      ++visemes;
      last_viseme = l.substr(l.rfind(' ') + 1);
    }
  }
  CHECK(visemes >= 1);
  CHECK(last_viseme == "sil");
  CHECK(has(r.out, "status: completed"));
  CHECK(has(r.out, "tts_calls: 1"));
}

TEST_CASE("unreachable pose is refused with no controller frames") {
  const Result r = sprite_cli({"--root", kRoot, "--instant", "pose", "0", "0", "0.30", "0", "0", "0"});
  CHECK(r.code != 0);
  CHECK(has(r.err, "unreachable"));
  CHECK(has(r.out, "controller_frames: 0"));
}

TEST_CASE("reachable pose reaches the controller once") {
  const Result r = sprite_cli({"--root", kRoot, "--instant", "pose", "0", "-0.01", "-0.02", "-5", "0", "10"});
  CAPTURE(r.err);
  CHECK(r.code == 0);
  CHECK(has(r.out, "controller_frames: 1"));
}

TEST_CASE("prefetch then say every entry without synthesis") {
  sprite::testing::TempDir dir;
  const std::string lib = kRoot + "/tests/fixtures/library3.json";
  const std::vector<std::string> base = {"--root", kRoot, "--cache", dir.path().string(), "--library", lib, "--instant"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return sprite_cli(a);
  };
  const Result p = with({"prefetch", lib});
  REQUIRE(p.code == 0);
  CHECK(has(p.out, "synthesized: 3"));
  CHECK(has(p.out, "cache_entries: 3"));
  for (const char* key : {"hello", "dance", "thanks"}) {
    const Result s = with({"say", key});
    CAPTURE(key);
    CHECK(s.code == 0);
    CHECK(has(s.out, "tts_calls: 0"));
  }
}

TEST_CASE("an unreachable TTS server is a clean failure") {
  sprite::testing::TempDir dir;
  const Result r = sprite_cli({"--root", kRoot, "--cache", dir.path().string(), "--tts", "http://127.0.0.1:9",
                               "--instant", "say", "Hello"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "error:"));
}

TEST_CASE("anim play runs a clip and reports body frames") {
  const Result r = sprite_cli({"--root", kRoot, "--instant", "anim", "play", "nod"});
  CAPTURE(r.err);
  CHECK(r.code == 0);
  CHECK(has(r.out, "body_frames: 51"));
  CHECK(has(r.out, "controller_frames: 51"));
  CHECK(sprite_cli({"--root", kRoot, "--instant", "anim", "play", "moonwalk"}).code == 2);
}

TEST_CASE("lint passes the bundled clips and flags bad ones") {
  sprite::testing::TempDir dir;
  const Result ok = sprite_cli({"--root", kRoot, "lint", kRoot + "/clips/nod.json", kRoot + "/clips/wink.json"});
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "0 issues"));

  const auto reach = dir.path() / "reach.json";
  std::ofstream(reach) << R"({"name":"reach","tracks":[{"channel":"z","keyframes":[{"t":0,"v":0},{"t":1,"v":0.08}]}]})";
  const Result bad = sprite_cli({"--root", kRoot, "lint", reach.string()});
  CHECK(bad.code == 1);

  const auto broken = dir.path() / "broken.json";
  std::ofstream(broken) << "{";
  CHECK(sprite_cli({"--root", kRoot, "lint", broken.string()}).code == 2);
}

TEST_CASE("workspace report runs offline") {
  const Result r = sprite_cli({"--root", kRoot, "workspace", "--step-mm", "5", "--step-deg", "5", "--json"});
  REQUIRE(r.code == 0);
  CHECK(has(r.out, "\"max_translation_m\""));
}

TEST_CASE("serve starts and stops on time") {
  sprite::testing::TempDir dir;
  const Result r =
      sprite_cli({"--root", kRoot, "--cache", dir.path().string(), "serve", "--port", "0", "--for", "0.2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "listening on ws://127.0.0.1:"));
  CHECK(has(r.out, "/robot/sprite"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(sprite_cli({}).code == 2);
  CHECK(sprite_cli({"fly"}).code == 2);
  CHECK(sprite_cli({"pose", "1", "2"}).code == 2);
  CHECK(sprite_cli({"--help"}).code == 0);
}
