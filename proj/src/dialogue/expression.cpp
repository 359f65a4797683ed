#include "sprite/dialogue/expression.hpp"

#include <fstream>

#include "json.hpp"
#include "sprite/dialogue/error.hpp"

namespace sprite::dialogue {

using face::ActionUnit;
using face::Side;

ExpressionRegistry ExpressionRegistry::standard() {
  ExpressionRegistry r;
  r.add({"neutral", {}});
  r.add({"happy", {{6, Side::Both, 0.6}, {12, Side::Both, 0.9}}});
  r.add({"sad", {{1, Side::Both, 0.7}, {4, Side::Both, 0.5}, {15, Side::Both, 0.8}}});
  r.add({"surprised", {{1, Side::Both, 1.0}, {2, Side::Both, 1.0}, {5, Side::Both, 0.8}, {26, Side::Both, 0.6}}});
  r.add({"angry", {{4, Side::Both, 0.9}, {5, Side::Both, 0.5}, {7, Side::Both, 0.6}}});
  r.add({"thinking", {{4, Side::Both, 0.3}, {7, Side::Left, 0.4}, {15, Side::Right, 0.2}}});
  r.add({"skeptical", {{2, Side::Left, 0.8}, {4, Side::Right, 0.4}}});
  return r;
}

ExpressionRegistry ExpressionRegistry::load(const std::filesystem::path& path) {
  auto fail = [&](const std::string& why) -> void {
    throw DialogueError(DialogueError::Kind::LibraryFormat, path.string(), path.string() + ": " + why);
  };
  std::ifstream in(path);
  if (!in) fail("cannot open");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(e.what());
  }
  if (!doc.is_object()) fail("expected an object of name: [units]");
  ExpressionRegistry r;
  r.add({"neutral", {}});
  for (const auto& [name, units] : doc.items()) {
    if (!units.is_array()) fail("expression '" + name + "' must be an array");
    face::Expression e{name, {}};
    for (const auto& u : units) {
      if (!u.is_object() || !u.contains("au") || !u["au"].is_number_integer() || !u.contains("intensity") ||
          !u["intensity"].is_number()) {
        fail("expression '" + name + "': units need integer 'au' and numeric 'intensity'");
      }
      ActionUnit au;
      au.id = u["au"].get<int>();
      au.intensity = u["intensity"].get<double>();
      const auto side = face::parse_side(u.value("side", "both"));
      if (!face::is_supported_action_unit(au.id) || !side || !(au.intensity >= 0.0 && au.intensity <= 1.0)) {
        fail("expression '" + name + "': unsupported unit");
      }
      au.side = *side;
      e.units.push_back(au);
    }
    r.add(std::move(e));
  }
  return r;
}

const face::Expression* ExpressionRegistry::find(const std::string& name) const {
  const auto it = items_.find(name);
  return it == items_.end() ? nullptr : &it->second;
}

std::vector<std::string> ExpressionRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [k, _] : items_) out.push_back(k);
  return out;
}

void ExpressionRegistry::add(face::Expression e) {
  std::string name = e.name;
  items_[name] = std::move(e);
}

}  // namespace sprite::dialogue
