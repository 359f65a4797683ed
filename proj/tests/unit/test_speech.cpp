#include <filesystem>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "sprite/dialogue/cache.hpp"
#include "sprite/dialogue/http_tts.hpp"
#include "sprite/dialogue/lexicon.hpp"
#include "sprite/dialogue/tts.hpp"
#include "sprite/dialogue/viseme.hpp"
#include "temp_dir.hpp"

using namespace sprite::dialogue;
using sprite::face::Viseme;

TEST_CASE("stub TTS times hello at 80 ms per phoneme") {
  StubTts tts;
  const SpeechTiming t = tts.synthesize("hello", "default");
  REQUIRE(t.phonemes.size() == 4);
  const char* expected[] = {"HH", "EH", "L", "OW"};
  for (int k = 0; k < 4; ++k) {
    CHECK(t.phonemes[k].symbol == expected[k]);
    CHECK(t.phonemes[k].start == doctest::Approx(0.08 * k).epsilon(1e-12));
    CHECK(t.phonemes[k].end == doctest::Approx(0.08 * (k + 1)).epsilon(1e-12));
  }
  CHECK(t.duration == doctest::Approx(0.32).epsilon(1e-12));
  REQUIRE(t.words.size() == 1);
  CHECK(t.words[0].symbol == "hello");
  // 44-byte header plus 16-bit samples at 16 kHz.
  CHECK(t.audio_bytes().size() == 44 + 2 * 4 * 1280);
  CHECK(tts.calls() == 1);
  t.validate();
}

TEST_CASE("stub TTS spells out unknown words") {
  StubTts tts;
  const SpeechTiming t = tts.synthesize("Hello xyz", "default");
  CHECK(t.phonemes.size() == 7);
  CHECK(t.words.size() == 2);
  CHECK(t.words[1].start == doctest::Approx(0.32));
  CHECK(t.duration == doctest::Approx(0.56));
}

TEST_CASE("stub TTS is deterministic") {
  StubTts a, b;
  const SpeechTiming x = a.synthesize("Hello world!", "v"), y = b.synthesize("Hello world!", "v");
  CHECK(x.audio_bytes() == y.audio_bytes());
  CHECK(timing_to_json(x) == timing_to_json(y));
}

TEST_CASE("empty speech gives an empty timing and no TTS call") {
  StubTts tts;
  const SpeechTiming t = synthesize(parse_dialogue("<anim:nod> ... "), &tts, nullptr, "default");
  CHECK(t.duration == 0.0);
  CHECK(t.phonemes.empty());
  CHECK(tts.calls() == 0);
}

TEST_CASE("hello maps to four visemes and a closing sil") {
  StubTts tts;
  const auto v = phonemes_to_visemes(tts.synthesize("hello", "default"));
  REQUIRE(v.size() == 5);
  const Viseme expected[] = {Viseme::kk, Viseme::E, Viseme::nn, Viseme::oh, Viseme::Sil};
  for (int k = 0; k < 5; ++k) {
    CHECK(v[k].viseme == expected[k]);
    CHECK(v[k].t == doctest::Approx(0.08 * k).epsilon(1e-12));
  }
}

TEST_CASE("empty timing gives a single sil at zero") {
  const auto v = phonemes_to_visemes(empty_timing());
  REQUIRE(v.size() == 1);
  CHECK(v[0] == VisemeEvent{0.0, Viseme::Sil});
}

TEST_CASE("repeated visemes merge and gaps close the mouth") {
  SpeechTiming t;
  t.duration = 1.0;
  t.phonemes = {{"P", 0.0, 0.1}, {"B", 0.1, 0.2}, {"M", 0.2, 0.3}, {"AA1", 0.5, 0.6}};
  const auto v = phonemes_to_visemes(t);
  REQUIRE(v.size() == 4);
  CHECK(v[0] == VisemeEvent{0.0, Viseme::PP});
  CHECK(v[1] == VisemeEvent{0.3, Viseme::Sil});
  CHECK(v[2] == VisemeEvent{0.5, Viseme::aa});
  CHECK(v[3] == VisemeEvent{1.0, Viseme::Sil});

  t.phonemes = {{"QQ", 0.0, 0.1}};
  CHECK_THROWS_AS(phonemes_to_visemes(t), DialogueError);
}

TEST_CASE("viseme table covers every phoneme the lexicon can emit") {
  const auto inventory = Lexicon::bundled().phoneme_inventory();
  CHECK(inventory.size() >= 30);
  for (const std::string& p : inventory) {
    CAPTURE(p);
    CHECK(viseme_for_phoneme(p).has_value());
  }
  CHECK(viseme_for_phoneme("ah0") == Viseme::aa);
  CHECK_FALSE(viseme_for_phoneme("XX").has_value());
}

TEST_CASE("timing validation rejects broken marks") {
  SpeechTiming t;
  t.duration = 0.2;
  t.phonemes = {{"AA", 0.0, 0.1}, {"B", 0.05, 0.2}};
  CHECK_THROWS_AS(t.validate(), DialogueError);
  t.phonemes = {{"AA", 0.0, 0.3}};
  CHECK_THROWS_AS(t.validate(), DialogueError);
  t.phonemes = {{"AA", 0.0, 0.1}, {"B", 0.1, 0.2}};
  t.words = {{"ab", 0.0, 0.15}};
  CHECK_THROWS_AS(t.validate(), DialogueError);
  t.words = {{"ab", 0.0, 0.2}};
  CHECK_NOTHROW(t.validate());
}

TEST_CASE("cache serves identical bytes with a single TTS call") {
  sprite::testing::TempDir dir;
  SpeechCache cache(dir.path());
  StubTts tts;
  const DialogueAction a = parse_dialogue("Hello <anim:nod> world!");
  const SpeechTiming first = synthesize(a, &tts, &cache, "default");
  const SpeechTiming second = synthesize(a, &tts, &cache, "default");
  CHECK(tts.calls() == 1);
  CHECK(first.audio_bytes() == second.audio_bytes());
  CHECK(timing_to_json(first).dump() == timing_to_json(second).dump());
  CHECK(cache.entry_count() == 1);

  // Another voice is another entry.
  synthesize(a, &tts, &cache, "other");
  CHECK(tts.calls() == 2);
  CHECK(cache.entry_count() == 2);

  const std::string key = SpeechCache::key("default", a.speech_text());
  CHECK(std::filesystem::exists(dir.path() / key / "audio.wav"));
  CHECK(std::filesystem::exists(dir.path() / key / "timing.json"));
}

TEST_CASE("cache-only synthesis works offline and fails cleanly on a miss") {
  sprite::testing::TempDir dir;
  SpeechCache cache(dir.path());
  StubTts tts;
  synthesize(parse_dialogue("Hello world!"), &tts, &cache, "default");
  CHECK_NOTHROW(synthesize(parse_dialogue("Hello world!"), nullptr, &cache, "default"));
  try {
    synthesize(parse_dialogue("Goodbye"), nullptr, &cache, "default");
    FAIL("expected TtsUnavailable");
  } catch (const DialogueError& e) {
    CHECK(e.kind() == DialogueError::Kind::TtsUnavailable);
  }
}

TEST_CASE("tampered cache entries are reported corrupt") {
  sprite::testing::TempDir dir;
  SpeechCache cache(dir.path());
  StubTts tts;
  synthesize(parse_dialogue("Hello world!"), &tts, &cache, "default");
  const std::string key = SpeechCache::key("default", "Hello world!");
  {
    std::ofstream out(dir.path() / key / "audio.wav", std::ios::binary | std::ios::app);
    out << "junk";
  }
  try {
    cache.load(key);
    FAIL("expected CacheCorrupt");
  } catch (const DialogueError& e) {
    CHECK(e.kind() == DialogueError::Kind::CacheCorrupt);
    CHECK(e.detail() == key);
  }
  std::filesystem::remove(dir.path() / key / "timing.json");
  CHECK_THROWS_AS(cache.load(key), DialogueError);
  CHECK_FALSE(cache.load(std::string(64, '0')).has_value());
}

TEST_CASE("base64 round trip") {
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 100u}) {
    std::vector<std::uint8_t> bytes(n);
    for (std::size_t i = 0; i < n; ++i) bytes[i] = static_cast<std::uint8_t>(i * 37 + 11);
    CHECK(base64_decode(base64_encode(bytes)) == bytes);
  }
  CHECK(base64_encode({'M', 'a', 'n'}) == "TWFu");
  CHECK_THROWS(base64_decode("abc"));
}

TEST_CASE("HTTP TTS client against a loopback server") {
  httplib::Server server;
  StubTts backend;
  std::string seen_voice;
  server.Post("/tts/synthesize", [&](const httplib::Request& req, httplib::Response& res) {
    const auto body = nlohmann::json::parse(req.body);
    seen_voice = body["voice"].get<std::string>();
    const SpeechTiming t = backend.synthesize(body["text"].get<std::string>(), seen_voice);
    nlohmann::json out = timing_to_json(t);
    out["audio"] = base64_encode(t.audio_bytes());
    res.set_content(out.dump(), "application/json");
  });
  server.Post("/broken/synthesize", [](const httplib::Request&, httplib::Response& res) {
    res.status = 500;
    res.set_content("oops", "text/plain");
  });
  server.Post("/garbled/synthesize", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"audio": "AAAA", "duration": 1.0, "phonemes": [{"symbol": "AA", "start": 0, "end": 2}]})",
                    "application/json");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  const std::string base = "http://127.0.0.1:" + std::to_string(port);
  HttpTtsClient client(base + "/tts/");
  const SpeechTiming got = client.synthesize("Hello world", "alto");
  const SpeechTiming want = StubTts{}.synthesize("Hello world", "alto");
  CHECK(seen_voice == "alto");
  CHECK(got.audio_bytes() == want.audio_bytes());
  CHECK(timing_to_json(got) == timing_to_json(want));
  CHECK(client.calls() == 1);

  auto kind_of = [](TtsClient& c) {
    try {
      c.synthesize("hi", "v");
    } catch (const DialogueError& e) {
      return e.kind();
    }
    return DialogueError::Kind::InvalidTiming;
  };
  HttpTtsClient broken(base + "/broken");
  CHECK(kind_of(broken) == DialogueError::Kind::TtsUnavailable);
  HttpTtsClient garbled(base + "/garbled");
  CHECK(kind_of(garbled) == DialogueError::Kind::TtsUnavailable);
  server.stop();
  th.join();

  HttpTtsClient gone(base, std::chrono::milliseconds(200));
  CHECK(kind_of(gone) == DialogueError::Kind::TtsUnavailable);
  CHECK_THROWS_AS(HttpTtsClient("ftp://x"), std::invalid_argument);
}
