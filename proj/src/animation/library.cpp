#include "sprite/animation/library.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sprite/animation/player.hpp"
#include "sprite/kinematics/validate.hpp"

namespace sprite::animation {

AnimationClip load_clip(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ClipError(ClipError::Kind::Syntax, path.string(), "cannot open clip file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_clip(buf.str());
  } catch (const ClipError& e) {
    const std::string where = path.filename().string() + (e.path().empty() ? "" : ":" + e.path());
    throw ClipError(e.kind(), where, e.detail());
  }
}

ClipLibrary ClipLibrary::load_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  ClipLibrary lib;
  for (const auto& f : files) {
    AnimationClip clip = load_clip(f);
    if (lib.find(clip.name()) != nullptr) {
      throw ClipError(ClipError::Kind::Schema, f.filename().string(), "duplicate clip name '" + clip.name() + "'");
    }
    lib.add(std::move(clip));
  }
  return lib;
}

void ClipLibrary::add(AnimationClip clip) {
  std::string name = clip.name();
  clips_.insert_or_assign(std::move(name), std::move(clip));
}

const AnimationClip* ClipLibrary::find(const std::string& name) const {
  const auto it = clips_.find(name);
  return it == clips_.end() ? nullptr : &it->second;
}

std::vector<std::string> ClipLibrary::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : clips_) out.push_back(name);
  return out;
}

LintReport lint_clip(const AnimationClip& clip, const kinematics::PlatformGeometry& geom, double rate) {
  LintReport report;
  report.clip = clip.name();
  ClipPlayer player(clip, rate);
  while (!player.done()) {
    const Frame f = player.next();
    ++report.framesChecked;
    const auto pose = body_pose(f);
    if (!pose) continue;
    const auto v = kinematics::validate_pose(*pose, geom);
    if (!v.valid) report.issues.push_back({f.t, v.describe()});
  }
  return report;
}

}  // namespace sprite::animation
