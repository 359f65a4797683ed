#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sprite/animation/clip.hpp"
#include "sprite/kinematics/geometry.hpp"

namespace sprite::animation {

// Clips by name, loaded from a directory of *.json files.
class ClipLibrary {
 public:
  ClipLibrary() = default;

  // Throws ClipError (with the file name prefixed) on the first bad file, or
  // when two files define the same clip name.
  static ClipLibrary load_directory(const std::filesystem::path& dir);

  void add(AnimationClip clip);
  const AnimationClip* find(const std::string& name) const;
  std::vector<std::string> names() const;
  std::size_t size() const { return clips_.size(); }

 private:
  std::map<std::string, AnimationClip> clips_;
};

struct LintIssue {
  double t = 0.0;
  std::string message;
};

struct LintReport {
  std::string clip;
  std::size_t framesChecked = 0;
  std::vector<LintIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Plays the clip at `rate` and checks every frame's body pose against the
// geometry with validate_pose.
LintReport lint_clip(const AnimationClip& clip, const kinematics::PlatformGeometry& geom, double rate = 50.0);

AnimationClip load_clip(const std::filesystem::path& path);

}  // namespace sprite::animation
