#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sprite/common/face.hpp"

namespace sprite::dialogue {

// Named facial expressions as action-unit sets; "neutral" is always present
// and empty.
class ExpressionRegistry {
 public:
  static ExpressionRegistry standard();
  // JSON object { name: [ {"au": N, "side"?: "left|right|both", "intensity": x} ] }
  static ExpressionRegistry load(const std::filesystem::path& path);

  const face::Expression* find(const std::string& name) const;
  std::vector<std::string> names() const;
  void add(face::Expression e);

 private:
  std::map<std::string, face::Expression> items_;
};

}  // namespace sprite::dialogue
