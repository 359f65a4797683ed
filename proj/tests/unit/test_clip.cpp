#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sprite/animation/clip.hpp"
#include "sprite/animation/library.hpp"

using namespace sprite::animation;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ClipError::Kind error_kind(const std::string& text, std::string* path = nullptr) {
  try {
    parse_clip(text);
  } catch (const ClipError& e) {
    if (path) *path = e.path();
    return e.kind();
  }
  FAIL("expected a ClipError");
  return ClipError::Kind::Syntax;
}

}  // namespace

TEST_CASE("minimal clip parses") {
  const AnimationClip c = parse_clip(R"({"name":"up","tracks":[{"channel":"z","keyframes":[{"t":0,"v":0},{"t":1,"v":0.02}]}]})");
  CHECK(c.name() == "up");
  CHECK(c.duration() == 1.0);
  CHECK(c.tracks().size() == 1);
  CHECK(c.sample("z", 1.0) == 0.02);
}

TEST_CASE("schema violations name the offending path") {
  std::string path;
  CHECK(error_kind(R"({"name":"a","tracks":[{"channel":"z","keyframes":[{"t":1,"v":0},{"t":0,"v":0}]}]})", &path) ==
        ClipError::Kind::Schema);
  CHECK(path == "/tracks/0/keyframes/1/t");

  CHECK(error_kind(R"({"name":"a","tracks":[{"channel":"z","keyframes":[{"t":0,"v":0,"speed":2}]}]})", &path) ==
        ClipError::Kind::Schema);
  CHECK(path == "/tracks/0/keyframes/0/speed");

  CHECK(error_kind(R"({"name":"a","tracks":[{"channel":"z","keyframes":[{"t":0,"v":0.5}]}]})", &path) ==
        ClipError::Kind::Schema);
  CHECK(path == "/tracks/0/keyframes/0/v");

  CHECK(error_kind(R"({"name":"a","tracks":[{"channel":"z","keyframes":[{"t":-1,"v":0}]}]})") ==
        ClipError::Kind::Schema);
  CHECK(error_kind(R"({"name":"a","tracks":[{"channel":"z","keyframes":[]}]})") == ClipError::Kind::Schema);
  CHECK(error_kind(R"({"tracks":[]})", &path) == ClipError::Kind::Schema);
  CHECK(error_kind(R"({"name":"a","tracks":{}})") == ClipError::Kind::Schema);
}

TEST_CASE("handle rules keep the time curve monotone") {
  std::string path;
  CHECK(error_kind(R"({"name":"a","tracks":[{"channel":"z","keyframes":[{"t":0,"v":0,"out":[-0.1,0]},{"t":1,"v":0}]}]})",
                   &path) == ClipError::Kind::Schema);
  CHECK(path == "/tracks/0/keyframes/0/out");
  CHECK(error_kind(R"({"name":"a","tracks":[{"channel":"z","keyframes":[{"t":0,"v":0,"out":[1.5,0]},{"t":1,"v":0}]}]})") ==
        ClipError::Kind::Schema);
  CHECK(error_kind(R"({"name":"a","tracks":[{"channel":"z","keyframes":[{"t":0,"v":0},{"t":1,"v":0,"in":[0.2,0]}]}]})") ==
        ClipError::Kind::Schema);
  CHECK(error_kind(R"({"name":"a","tracks":[{"channel":"z","keyframes":[{"t":0,"v":0,"in":[-0.2,0]},{"t":1,"v":0}]}]})") ==
        ClipError::Kind::Schema);
  CHECK(error_kind(R"({"name":"a","tracks":[{"channel":"z","keyframes":[{"t":0,"v":0,"out":[0.5]},{"t":1,"v":0}]}]})") ==
        ClipError::Kind::Schema);
}

TEST_CASE("channel errors") {
  CHECK(error_kind(R"({"name":"a","tracks":[{"channel":"z","keyframes":[{"t":0,"v":0}]},
                                            {"channel":"z","keyframes":[{"t":0,"v":0}]}]})") ==
        ClipError::Kind::DuplicateChannel);
  CHECK(error_kind(R"({"name":"a","tracks":[{"channel":"tail","keyframes":[{"t":0,"v":0}]}]})") ==
        ClipError::Kind::UnknownChannel);
  CHECK(error_kind(R"({"name":"a","tracks":[{"channel":"au3","keyframes":[{"t":0,"v":0}]}]})") ==
        ClipError::Kind::UnknownChannel);
  CHECK(error_kind(R"({"name":"a","tracks":[{"channel":"viseme_XX","keyframes":[{"t":0,"v":0}]}]})") ==
        ClipError::Kind::UnknownChannel);
}

TEST_CASE("syntax errors carry a byte offset") {
  std::string path;
  CHECK(error_kind(R"({"name": "a", "tracks": [)", &path) == ClipError::Kind::Syntax);
  CHECK(path.rfind("byte ", 0) == 0);
}

TEST_CASE("face and gaze channels are accepted") {
  const AnimationClip c = parse_clip(R"({"name":"f","tracks":[
      {"channel":"au12_left","keyframes":[{"t":0,"v":0},{"t":0.5,"v":1}]},
      {"channel":"viseme_aa","keyframes":[{"t":0,"v":0.4}]},
      {"channel":"gaze_x","keyframes":[{"t":0,"v":-1},{"t":1,"v":1}]}]})");
  CHECK(c.tracks().size() == 3);
  CHECK(c.duration() == 1.0);
}

TEST_CASE("golden happy_dance round-trips") {
  const std::string text = read_file(std::string(SPRITE_SOURCE_DIR) + "/clips/happy_dance.json");
  const AnimationClip a = parse_clip(text);
  const AnimationClip b = parse_clip(serialize_clip(a));
  CHECK(a == b);
  CHECK(serialize_clip(a) == serialize_clip(b));
  CHECK(a.name() == "happy_dance");
}

TEST_CASE("clip library loads the golden set") {
  const ClipLibrary lib = ClipLibrary::load_directory(std::string(SPRITE_SOURCE_DIR) + "/clips");
  CHECK(lib.size() >= 5);
  CHECK(lib.find("happy_dance") != nullptr);
  CHECK(lib.find("nod") != nullptr);
  CHECK(lib.find("nope") == nullptr);
}
